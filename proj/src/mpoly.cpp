#include "jkres/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace jkres {

Rational evaluate(const MPoly<Rational>& p, const RatVec& point) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        if (e.size() > point.size())
            throw Error(ErrorCode::BadInput, "evaluate: point has too few coordinates");
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= pow(point[i], e[i]);
        total += term;
    }
    return total;
}

std::string poly_to_string(const MPoly<Rational>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest total degree first, then lex on exponents: stable, readable.
    std::vector<std::pair<std::vector<int>, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = MPoly<Rational>::total(a.first), db = MPoly<Rational>::total(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [e, c] : terms) {
        Rational coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;
        bool has_vars = !e.empty();
        bool coeff_is_one = (coeff == Rational(1));
        if (!coeff_is_one || !has_vars) out << coeff.str();
        bool printed = !coeff_is_one || !has_vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

} // namespace jkres
