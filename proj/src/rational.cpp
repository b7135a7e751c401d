#include "gext/rational.hpp"

#include <cctype>

#include "gext/errors.hpp"

namespace gext {

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw DomainError("malformed rational", std::string(text));

    auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    mpz_class n(strip_plus(num), 10), d(strip_plus(den), 10);
    if (d == 0)
        throw DomainError("zero denominator", std::string(text));
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace gext
