#include "qylag/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qylag {

namespace {

constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

const char* kVarNames[kVarCount] = {"x", "y", "q", "beta", "t", "a", "b"};
const char* kVarLatex[kVarCount] = {"x", "y", "q", "\\beta", "t", "a", "b"};

}  // namespace

const char* var_name(Var v) { return kVarNames[idx(v)]; }

Rat rat_pow(const Rat& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rat(1) / rat_pow(base, -exponent);
    }
    Rat acc(1);
    for (long i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

MPoly MPoly::constant(Int c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(kZeroExponents, std::move(c));
    return p;
}

MPoly MPoly::variable(Var v) { return var_pow(v, 1); }

MPoly MPoly::monomial(const Exponents& e, Int c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

MPoly var_pow(Var v, std::uint32_t e) {
    Exponents exps{};
    exps[static_cast<std::size_t>(v)] = e;
    return MPoly::monomial(exps, 1);
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExponents);
}

Int MPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

std::uint32_t MPoly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
    return d;
}

void MPoly::add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) { return mul(lhs, rhs); }

MPoly& MPoly::operator*=(const MPoly& rhs) {
    *this = mul(*this, rhs);
    return *this;
}

MPoly& MPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly add(const MPoly& p, const MPoly& r, const TruncationPolicy& policy) {
    MPoly s = p;
    s += r;
    return policy.bounded() ? truncated(s, policy) : s;
}

MPoly mul(const MPoly& p, const MPoly& r, const TruncationPolicy& policy) {
    MPoly prod;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [er, cr] : r.terms()) {
            Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ep[i] + er[i];
            if (!policy.keeps(e)) continue;
            prod.add_term(e, cp * cr);
        }
    }
    return prod;
}

MPoly truncated(const MPoly& p, const TruncationPolicy& policy) {
    if (!policy.bounded()) return p;
    MPoly r;
    for (const auto& [e, c] : p.terms())
        if (policy.keeps(e)) r.add_term(e, c);
    return r;
}

MPoly pow(const MPoly& p, std::uint32_t e, const TruncationPolicy& policy) {
    MPoly acc = MPoly::one();
    for (std::uint32_t i = 0; i < e; ++i) acc = mul(acc, p, policy);
    return acc;
}

MPoly substitute(const MPoly& p, Var var, const MPoly& value) {
    if (value.uses(var))
        throw SubstitutionCycle(std::string("substitute: value contains ") + var_name(var));
    const std::size_t v = idx(var);
    std::vector<MPoly> powers{MPoly::one()};
    MPoly result;
    for (const auto& [e, c] : p.terms()) {
        while (powers.size() <= e[v]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[v] = 0;
        result += MPoly::monomial(rest, c) * powers[e[v]];
    }
    return result;
}

Rat eval_rat(const MPoly& p, const std::map<Var, Rat>& assignment) {
    Rat total(0);
    for (const auto& [e, c] : p.terms()) {
        Rat term(c);
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                throw MissingVariable(std::string("eval_rat: no value for ") +
                                      kVarNames[i]);
            term *= rat_pow(it->second, e[i]);
        }
        total += term;
    }
    return total;
}

MPoly coeff_in_var(const MPoly& p, Var var, std::uint32_t k) {
    const std::size_t v = idx(var);
    MPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        Exponents rest = e;
        rest[v] = 0;
        r.add_term(rest, c);
    }
    return r;
}

bool is_nonnegative(const MPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c < 0) return false;
    return true;
}

MPoly series_inverse(const MPoly& p, const TruncationPolicy& policy) {
    if (!policy.bounded()) throw NoTruncation("series_inverse: unbounded policy");
    if (p.constant_term() != 1) throw NotAUnit("series_inverse: constant term is not 1");
    MPoly u = truncated(MPoly::one() - p, policy);  // p = 1 - u
    MPoly result = MPoly::one();
    MPoly power = MPoly::one();
    // Any unit's non-constant part is nilpotent within this horizon: each of
    // its monomials must carry a bounded variable, so u^(q_cap + t_cap) = 0.
    const std::uint32_t horizon = policy.max_q_degree.value_or(0) + policy.max_t_degree.value_or(0);
    for (std::uint32_t i = 1; i <= horizon && !power.is_zero(); ++i) {
        power = mul(power, u, policy);
        result += power;
    }
    if (!power.is_zero())
        throw NotAUnit("series_inverse: argument is not invertible under the policy");
    return result;
}

namespace {

// Shared grouping for the renderers: q-free monomial -> (q exponent -> coeff),
// groups already in display order thanks to TermOrder.
using QGroup = std::map<std::uint32_t, Int>;
using Groups = std::map<Exponents, QGroup, TermOrder>;

Groups group_by_qfree(const MPoly& p) {
    Groups groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        const std::uint32_t qe = rest[idx(Var::q)];
        rest[idx(Var::q)] = 0;
        groups[rest][qe] = c;
    }
    return groups;
}

std::string int_str(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// One q-term like "2*q^3" / "q" / "-5" (latex: "2q^{3}").
std::string q_term(const Int& coeff, std::uint32_t qe, bool latex) {
    std::string s;
    const Int abs = coeff < 0 ? Int(-coeff) : coeff;
    if (coeff < 0) s += "-";
    if (abs != 1 || qe == 0) s += int_str(abs);
    if (qe > 0) {
        if (abs != 1 && !latex) s += "*";
        s += "q";
        if (qe > 1) s += latex ? "^{" + std::to_string(qe) + "}" : "^" + std::to_string(qe);
    }
    return s;
}

// Ascending q powers, signs inline: "2+q", "-1+q".
std::string q_poly_str(const QGroup& g, bool latex) {
    std::string s;
    bool first = true;
    for (const auto& [qe, c] : g) {
        std::string piece = q_term(c, qe, latex);
        if (!first && piece[0] != '-') s += "+";
        s += piece;
        first = false;
    }
    return s;
}

std::string monomial_str(const Exponents& e, bool latex) {
    std::string s;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (i == idx(Var::q) || e[i] == 0) continue;
        if (!s.empty() && !latex) s += "*";
        s += latex ? kVarLatex[i] : kVarNames[i];
        if (e[i] > 1)
            s += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
    }
    return s;
}

std::string render(const MPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    const Groups groups = group_by_qfree(p);
    // a plain constant renders bare, e.g. "1+2*q"
    if (groups.size() == 1 && monomial_str(groups.begin()->first, latex).empty())
        return q_poly_str(groups.begin()->second, latex);
    std::string out;
    for (const auto& [mono, group] : groups) {
        const std::string m = monomial_str(mono, latex);
        // factor the sign out of all-negative groups: "x - (1+q)*y"
        const bool negative =
            std::all_of(group.begin(), group.end(), [](const auto& t) { return t.second < 0; });
        QGroup normalized;
        for (const auto& [qe, c] : group) normalized.emplace(qe, negative ? Int(-c) : c);
        std::string piece;
        if (normalized.size() == 1) {
            const auto& [qe, c] = *normalized.begin();
            const std::string coeff = q_term(c, qe, latex);
            if (m.empty())
                piece = coeff;
            else if (coeff == "1")
                piece = m;
            else
                piece = coeff + (latex ? "" : "*") + m;
        } else {
            piece = "(" + q_poly_str(normalized, latex) + ")";
            if (!m.empty()) piece += (latex ? "" : "*") + m;
        }
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace

std::string to_text(const MPoly& p) { return render(p, false); }

std::string to_latex(const MPoly& p) { return render(p, true); }

}  // namespace qylag
