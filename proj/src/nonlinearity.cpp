#include "cascade/nonlinearity.hpp"

#include "cascade/errors.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace cascade {

namespace {

void check_kappa(double kappa, const char* family) {
    if (!std::isfinite(kappa) || kappa < 0.5) {
        throw InvalidSpec(std::string(family) + " nonlinearity requires kappa >= 1/2, got " +
                          std::to_string(kappa));
    }
}

}  // namespace

NonlinearitySpec NonlinearitySpec::unit() { return {}; }

NonlinearitySpec NonlinearitySpec::gilmore_perelomov(double kappa) {
    check_kappa(kappa, "Gilmore-Perelomov");
    NonlinearitySpec s;
    s.kind_ = Kind::GilmorePerelomov;
    s.kappa_ = kappa;
    return s;
}

NonlinearitySpec NonlinearitySpec::barut_girardello(double kappa) {
    check_kappa(kappa, "Barut-Girardello");
    NonlinearitySpec s;
    s.kind_ = Kind::BarutGirardello;
    s.kappa_ = kappa;
    return s;
}

NonlinearitySpec NonlinearitySpec::tabulated(std::vector<double> values) {
    if (values.empty()) {
        throw InvalidSpec("tabulated nonlinearity needs at least one entry");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k]) || values[k] <= 0.0) {
            throw InvalidSpec("tabulated nonlinearity value at n = " + std::to_string(k + 1) +
                              " must be finite and strictly positive");
        }
    }
    NonlinearitySpec s;
    s.kind_ = Kind::Tabulated;
    s.table_ = std::move(values);
    return s;
}

NonlinearitySpec NonlinearitySpec::parse_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> values;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        long long n = 0;
        double value = 0.0;
        if (!(fields >> n)) {
            // blank or comment-only line
            std::string rest;
            fields.clear();
            if (fields >> rest) {
                throw InvalidSpec("table line " + std::to_string(line_no) + ": expected \"n value\"");
            }
            continue;
        }
        std::string trailing;
        if (!(fields >> value) || (fields >> trailing)) {
            throw InvalidSpec("table line " + std::to_string(line_no) + ": expected \"n value\"");
        }
        if (n != static_cast<long long>(values.size()) + 1) {
            throw InvalidSpec("table line " + std::to_string(line_no) + ": expected n = " +
                              std::to_string(values.size() + 1) + ", got " + std::to_string(n));
        }
        values.push_back(value);
    }
    return tabulated(std::move(values));
}

NonlinearitySpec NonlinearitySpec::load_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidSpec("cannot open nonlinearity table " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

double NonlinearitySpec::eval(unsigned n) const {
    if (n == 0) {
        throw DomainError("nonlinearity function is not defined at n = 0");
    }
    switch (kind_) {
    case Kind::Unit:
        return 1.0;
    case Kind::GilmorePerelomov:
        return 1.0 / std::sqrt(n + 2.0 * kappa_ - 1.0);
    case Kind::BarutGirardello:
        return std::sqrt(n + 2.0 * kappa_ - 1.0);
    case Kind::Tabulated:
        if (n > table_.size()) {
            throw DomainError("tabulated nonlinearity queried at n = " + std::to_string(n) +
                              " beyond its last entry n = " + std::to_string(table_.size()));
        }
        return table_[n - 1];
    }
    return 1.0;
}

double NonlinearitySpec::log_factorial(unsigned n) const {
    if (kind_ == Kind::Unit) {
        return 0.0;
    }
    double sum = 0.0;
    for (unsigned k = 1; k <= n; ++k) {
        sum += std::log(eval(k));
    }
    return sum;
}

unsigned NonlinearitySpec::max_n() const noexcept {
    if (kind_ == Kind::Tabulated) {
        return static_cast<unsigned>(table_.size());
    }
    return std::numeric_limits<unsigned>::max();
}

std::string NonlinearitySpec::describe() const {
    std::ostringstream out;
    switch (kind_) {
    case Kind::Unit:
        out << "unit";
        break;
    case Kind::GilmorePerelomov:
        out << "gp(kappa=" << kappa_ << ")";
        break;
    case Kind::BarutGirardello:
        out << "bg(kappa=" << kappa_ << ")";
        break;
    case Kind::Tabulated:
        out << "table(" << table_.size() << " entries)";
        break;
    }
    return out.str();
}

}  // namespace cascade
