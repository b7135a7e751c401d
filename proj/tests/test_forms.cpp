#include <doctest.h>

#include <memory>

#include "gext/errors.hpp"
#include "gext/form_io.hpp"
#include "gext/forms.hpp"
#include "gext/random_forms.hpp"
#include "oracles.hpp"

using namespace gext;

namespace {

ComplexPtr make(Graph g, std::size_t cap)
{
    return std::make_shared<const CliqueComplex>(std::move(g), cap);
}

} // namespace

TEST_CASE("rational text")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK_THROWS_AS(parse_rational("-2/-1"), DomainError);
}

TEST_CASE("rational parsing edge cases")
{
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("+5")) == "5");
    CHECK(to_string(parse_rational("-1/2")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK(factorial(5) == 120);
}

TEST_CASE("rational addition agrees with cross-multiplication")
{
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        mpz_class a = static_cast<long>(rng.uniform(-1000000, 1000000));
        mpz_class b = static_cast<long>(rng.uniform(1, 1000000));
        mpz_class c = static_cast<long>(rng.uniform(-1000000, 1000000));
        mpz_class e = static_cast<long>(rng.uniform(1, 1000000));
        // blow past 64 bits
        a *= a * a;
        e *= e * e;
        Rational x(a, b), y(c, e);
        x.canonicalize();
        y.canonicalize();
        Rational sum = x + y;
        // a/b + c/e == (a e + c b) / (b e), compared by cross-multiplying
        mpz_class num = a * e + c * b, den = b * e;
        CHECK(sum.get_num() * den == num * sum.get_den());
        CHECK(sum.get_den() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), sum.get_num().get_mpz_t(), sum.get_den().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("form evaluation")
{
    auto cx = make(parse_edge_list("a b\nb c\nc d\n"), 3);
    Form alpha(cx, 1);
    alpha.set(std::vector<VertexId>{0, 1}, 1);

    CHECK(alpha({1, 0}) == -1);
    CHECK(alpha({0, 1}) == 1);
    CHECK(alpha({0, 0}) == 0);
    CHECK(alpha({0, 2}) == 0); // non-adjacent
    CHECK_THROWS_AS(alpha({0, 1, 2}), DomainError);
    CHECK_THROWS_AS(alpha.set(std::vector<VertexId>{0, 2}, 1), DomainError);

    alpha.set(std::vector<VertexId>{2, 1}, Rational(3, 2));
    CHECK(alpha.coeff(*cx->index_of(std::vector<VertexId>{1, 2})) == Rational(-3, 2));
}

TEST_CASE("tensor evaluation")
{
    auto cx = make(parse_edge_list("a b\nb c\n"), 3);
    Tensor t(cx, 1);
    t.set(std::vector<VertexId>{0, 1}, 1);
    CHECK(t(std::vector<VertexId>{0, 1}) == 1);
    CHECK(t(std::vector<VertexId>{1, 0}) == 0);

    Tensor t2(cx, 2);
    CHECK(t2(std::vector<VertexId>{0, 1, 2}) == 0); // path has no triangle
    CHECK_THROWS_AS(t2.set(std::vector<VertexId>{0, 1, 2}, 1), DomainError);
    CHECK(Tensor(cx, 0)(std::vector<VertexId>{2}) == 0);
    CHECK_THROWS_AS(t(std::vector<VertexId>{0}), DomainError);
}

TEST_CASE("characteristic functions")
{
    auto cx = make(named::complete(4), 2);
    Form chi_a = chi(cx, 0);
    CHECK(chi_a({0}) == 1);
    CHECK(chi_a({1}) == 0);
    Form sum(cx, 0);
    for (VertexId v = 0; v < 4; ++v)
        sum = sum + chi(cx, v);
    CHECK(sum == constant(cx, 1));
    CHECK_THROWS_AS(chi(cx, 4), DomainError);
}

TEST_CASE("linear structure")
{
    auto cx = make(named::complete(4), 3);
    Rng rng(3);
    Form a = random_form(cx, 1, rng), b = random_form(cx, 1, rng);
    CHECK((a + scale(-1, a)).is_zero());
    CHECK(scale(0, a).is_zero());
    Form s = a + b;
    for (const auto& x : oracle::ordered_clique_tuples(cx->graph(), 2))
        CHECK(s(x) == a(x) + b(x));
    CHECK_THROWS_AS(a + random_form(cx, 2, rng), DomainError);

    auto other = make(named::complete(4), 3);
    CHECK_THROWS_AS(a + Form(other, 1), DomainError);
}

TEST_CASE("alternation is exhaustive over permutations; zeros are never stored")
{
    auto cx = make(named::complete(5), 4);
    Rng rng(17);
    for (std::size_t k = 0; k <= 3; ++k) {
        Form f = random_form(cx, k, rng);
        for (const auto& [idx, value] : f.coeffs()) {
            CHECK(value != 0);
            const auto& cell = f.cell(idx);
            for (const auto& p : oracle::all_permutations(k + 1)) {
                std::vector<VertexId> t(k + 1);
                for (std::size_t i = 0; i <= k; ++i)
                    t[i] = cell[p[i]];
                CHECK(f(t) == oracle::cycle_sign(p) * value);
            }
        }
        Form g = f - f;
        CHECK(g.nonzeros() == 0);
    }
}

TEST_CASE("to_tensor spreads every ordering")
{
    auto cx = make(named::complete(3), 3);
    Form f(cx, 2);
    f.set_coeff(0, 6);
    Tensor t = to_tensor(f);
    CHECK(t.coeffs().size() == 6);
    CHECK(t(std::vector<VertexId>{1, 0, 2}) == -6);
}

TEST_CASE("form JSON")
{
    auto cx = make(parse_edge_list("a b\nb c\nc a\n"), 3);
    Form alpha = form_from_string(
        R"({"degree":1,"entries":[{"clique":["c","a"],"value":"-4"},{"clique":["a","b"],"value":1},{"clique":["b","c"],"value":"4/2"}]})",
        cx);
    CHECK(alpha({0, 2}) == 4);
    CHECK(form_to_string(alpha) ==
          R"({"degree":1,"entries":[{"clique":["a","b"],"value":"1"},{"clique":["a","c"],"value":"4"},{"clique":["b","c"],"value":"2"}]})");
    CHECK(form_from_string(form_to_string(alpha), cx) == alpha);

    CHECK_THROWS_AS(form_from_string(R"({"degree":1,"entries":[{"clique":["a","z"],"value":"1"}]})", cx),
                    DomainError);
    CHECK_THROWS_AS(form_from_string(R"({"degree":1,"entries":[{"clique":["a","a"],"value":"1"}]})", cx),
                    DomainError);
    CHECK_THROWS_AS(
        form_from_string(
            R"({"degree":1,"entries":[{"clique":["a","b"],"value":"1"},{"clique":["b","a"],"value":"1"}]})", cx),
        DomainError);
    CHECK_THROWS_AS(form_from_string(R"({"degree":1,"entries":[{"clique":["a","b"],"value":"1/0"}]})", cx),
                    DomainError);
    CHECK_THROWS_AS(form_from_string(R"({"degree":5})", cx), CapacityError);
    CHECK_THROWS_AS(form_from_string("{", cx), ParseError);
}

TEST_CASE("form JSON round trip preserves random forms")
{
    auto cx = make(named::octahedron(), 3);
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        Form f = random_form(cx, static_cast<std::size_t>(rng.uniform(0, 2)), rng);
        CHECK(form_from_string(form_to_string(f), cx) == f);
    }
}
