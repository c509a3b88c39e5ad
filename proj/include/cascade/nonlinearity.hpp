#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cascade {

/// Intensity function f(n) deforming the ladder operators, A = a f(n).
///
/// The same type describes both the nonlinearity of the initial coherent
/// state and the intensity-dependent coupling g(n). Evaluation is defined
/// for n >= 1 only; f(0) never enters any formula.
class NonlinearitySpec {
public:
    enum class Kind { Unit, GilmorePerelomov, BarutGirardello, Tabulated };

    NonlinearitySpec() = default;

    static NonlinearitySpec unit();
    /// f(n) = 1/sqrt(n + 2 kappa - 1), kappa >= 1/2.
    static NonlinearitySpec gilmore_perelomov(double kappa);
    /// f(n) = sqrt(n + 2 kappa - 1), kappa >= 1/2.
    static NonlinearitySpec barut_girardello(double kappa);
    /// values[k] is f(k + 1); must be non-empty and strictly positive.
    static NonlinearitySpec tabulated(std::vector<double> values);

    /// Reads "n value" lines, n = 1, 2, ... contiguous. '#' starts a comment.
    static NonlinearitySpec load_table(const std::filesystem::path& path);
    static NonlinearitySpec parse_table(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    double kappa() const noexcept { return kappa_; }
    const std::vector<double>& table() const noexcept { return table_; }

    /// f(n). Throws DomainError for n = 0 or n beyond a table.
    double eval(unsigned n) const;

    /// ln([f(n)]!) = sum_{k=1..n} ln f(k); zero for n = 0.
    double log_factorial(unsigned n) const;

    /// Largest n that eval accepts.
    unsigned max_n() const noexcept;

    std::string describe() const;

private:
    Kind kind_ = Kind::Unit;
    double kappa_ = 0.5;
    std::vector<double> table_;
};

}  // namespace cascade
