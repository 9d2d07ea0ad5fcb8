#pragma once

// Exact sparse multivariate polynomial arithmetic over arbitrary-precision
// integers, in the fixed variable universe {x, y, q, beta, t, a, b}.
//
// Every value is immutable once built and every operation is a pure
// function, so concurrent use needs no synchronization.  Terms are kept in
// a canonical order (graded lexicographic, highest first) which makes text
// and JSON renderings bit-exact across runs.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qylag {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number; boost keeps it normalized (denominator > 0,
/// gcd(|num|, den) = 1), which is the invariant we rely on.
using Rat = boost::multiprecision::cpp_rational;

Rat rat_pow(const Rat& base, long exponent);

enum class Var : std::size_t { x = 0, y = 1, q = 2, beta = 3, t = 4, a = 5, b = 6 };

inline constexpr std::size_t kVarCount = 7;

const char* var_name(Var v);

/// Dense exponent vector in the fixed variable order.
using Exponents = std::array<std::uint32_t, kVarCount>;

inline constexpr Exponents kZeroExponents{};

/// Graded lexicographic order, descending: larger total degree first, ties
/// broken by the lexicographically larger exponent vector (x weighs most).
struct TermOrder {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const {
        std::uint64_t dl = 0, dr = 0;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            dl += lhs[i];
            dr += rhs[i];
        }
        if (dl != dr) return dl > dr;
        return lhs > rhs;
    }
};

struct SubstitutionCycle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MissingVariable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAUnit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoTruncation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Degree caps applied eagerly after every add/mul: a monomial whose
/// q-exponent (resp. t-exponent) meets or exceeds the bound is dropped.
struct TruncationPolicy {
    std::optional<std::uint32_t> max_q_degree;
    std::optional<std::uint32_t> max_t_degree;

    static TruncationPolicy none() { return {}; }
    static TruncationPolicy q_below(std::uint32_t bound) { return {bound, std::nullopt}; }
    static TruncationPolicy t_below(std::uint32_t bound) { return {std::nullopt, bound}; }
    static TruncationPolicy qt_below(std::uint32_t q_bound, std::uint32_t t_bound) {
        return {q_bound, t_bound};
    }

    bool bounded() const { return max_q_degree.has_value() || max_t_degree.has_value(); }

    bool keeps(const Exponents& e) const {
        if (max_q_degree && e[static_cast<std::size_t>(Var::q)] >= *max_q_degree) return false;
        if (max_t_degree && e[static_cast<std::size_t>(Var::t)] >= *max_t_degree) return false;
        return true;
    }
};

class MPoly {
  public:
    using TermMap = std::map<Exponents, Int, TermOrder>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }
    static MPoly one() { return constant(1); }
    static MPoly constant(Int c);
    static MPoly variable(Var v);
    static MPoly monomial(const Exponents& e, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of an exact monomial (0 if absent).
    Int coefficient(const Exponents& e) const;
    Int constant_term() const { return coefficient(kZeroExponents); }

    std::uint32_t degree_in(Var v) const;
    bool uses(Var v) const { return degree_in(v) > 0; }

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    MPoly& operator*=(const Int& c);

    MPoly operator-() const;

    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    friend MPoly operator*(MPoly lhs, const Int& c) { return lhs *= c; }
    friend MPoly operator*(const Int& c, MPoly rhs) { return rhs *= c; }

    friend bool operator==(const MPoly& lhs, const MPoly& rhs) { return lhs.terms_ == rhs.terms_; }
    friend bool operator!=(const MPoly& lhs, const MPoly& rhs) { return !(lhs == rhs); }

    /// Inserts c into the term at e (dropping the term if it cancels).
    void add_term(const Exponents& e, const Int& c);

  private:
    TermMap terms_;
};

/// v^e as a polynomial.
MPoly var_pow(Var v, std::uint32_t e);

/// Sum with eager truncation.
MPoly add(const MPoly& p, const MPoly& r, const TruncationPolicy& policy = TruncationPolicy::none());

/// Product with eager truncation; exact over the integers.
MPoly mul(const MPoly& p, const MPoly& r, const TruncationPolicy& policy = TruncationPolicy::none());

/// Drops every monomial the policy rejects.
MPoly truncated(const MPoly& p, const TruncationPolicy& policy);

/// p^e (e small), truncating along the way.
MPoly pow(const MPoly& p, std::uint32_t e, const TruncationPolicy& policy = TruncationPolicy::none());

/// Replaces var by value everywhere, fully expanded.  Throws
/// SubstitutionCycle when value itself mentions var.
MPoly substitute(const MPoly& p, Var var, const MPoly& value);

/// Exact rational evaluation; the assignment must cover every variable that
/// actually occurs in p (MissingVariable otherwise).
Rat eval_rat(const MPoly& p, const std::map<Var, Rat>& assignment);

/// The polynomial multiplying var^k, with var removed.
MPoly coeff_in_var(const MPoly& p, Var var, std::uint32_t k);

/// True iff every stored coefficient is > 0 (zero terms are never stored).
bool is_nonnegative(const MPoly& p);

/// Multiplicative inverse modulo the truncation policy.  Requires constant
/// term 1 (NotAUnit) and at least one bound (NoTruncation); also throws
/// NotAUnit when the non-constant part fails to vanish under the policy's
/// nilpotency horizon (e.g. inverting 1 - x under a q-only bound).
MPoly series_inverse(const MPoly& p, const TruncationPolicy& policy);

/// Canonical text rendering, e.g. "(2+q)*y + 1": terms grouped by their
/// q-free monomial in descending graded-lex order, each group's coefficient
/// written as an integer polynomial in q with ascending powers.
std::string to_text(const MPoly& p);

/// Same grouping as to_text, TeX-friendly: "\\beta", braced exponents, no '*'.
std::string to_latex(const MPoly& p);

}  // namespace qylag
