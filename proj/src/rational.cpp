#include "jkres/rational.hpp"

namespace jkres {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::NotPointed: return "NotPointed";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::OutsideCone: return "OutsideCone";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::NonUnimodular: return "NonUnimodular";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::MarginMismatch: return "MarginMismatch";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(parse_int(text));
        Int num = parse_int(text.substr(0, slash));
        Int den = parse_int(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::BadInput, "cannot parse rational '" + text + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return int_to_string(numerator());
    return int_to_string(numerator()) + "/" + int_to_string(denominator());
}

Rational pow(const Rational& base, long exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Rational result(1);
    Rational b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

std::string int_to_string(const Int& n) { return n.get_str(); }

Int parse_int(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body[0] == '+') body = body.substr(1);
    if (body.empty()) throw std::invalid_argument("empty integer");
    size_t digits_from = (body[0] == '-') ? 1 : 0;
    if (digits_from == body.size()) throw std::invalid_argument("sign without digits");
    for (size_t i = digits_from; i < body.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(body[i]))) throw std::invalid_argument("bad digit");
    return Int(body, 10);
}

RatVec to_rational_vec(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

} // namespace jkres
