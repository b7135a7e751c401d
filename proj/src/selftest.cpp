#include "gext/selftest.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "gext/calculus.hpp"
#include "gext/cohomology.hpp"
#include "gext/form_io.hpp"
#include "gext/random_forms.hpp"
#include "gext/uniqueness.hpp"

namespace gext {

bool SelftestReport::pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const SelftestRow& r) { return r.pass; });
}

nlohmann::json SelftestReport::to_json() const
{
    nlohmann::json out{{"seed", seed}, {"pass", pass()}, {"results", nlohmann::json::array()}};
    for (const auto& r : rows) {
        nlohmann::json row{{"check", r.check}, {"graph", r.graph}, {"cases", r.cases}, {"pass", r.pass}};
        if (!r.note.empty())
            row["note"] = r.note;
        out["results"].push_back(std::move(row));
    }
    return out;
}

std::string SelftestReport::table() const
{
    std::ostringstream os;
    os << "check                 graph        cases  result\n";
    for (const auto& r : rows) {
        os << r.check << std::string(r.check.size() < 22 ? 22 - r.check.size() : 1, ' ') << r.graph
           << std::string(r.graph.size() < 13 ? 13 - r.graph.size() : 1, ' ') << r.cases
           << std::string(7 - std::min<std::size_t>(6, std::to_string(r.cases).size()), ' ')
           << (r.pass ? "PASS" : "FAIL");
        if (!r.note.empty())
            os << "  " << r.note;
        os << "\n";
    }
    os << (pass() ? "all checks passed\n" : "FAILURES\n");
    return os.str();
}

std::vector<std::pair<std::string, Graph>> selftest_corpus()
{
    return {{"K3", named::complete(3)},     {"K4", named::complete(4)}, {"K5", named::complete(5)},
            {"C4", named::cycle(4)},        {"C5", named::cycle(5)},    {"C6", named::cycle(6)},
            {"Petersen", named::petersen()}, {"octahedron", named::octahedron()}};
}

namespace {

// Accumulates cases into one row, keeping the first failure note.
class RowBuilder
{
  public:
    RowBuilder(std::string check, std::string graph) : row_{std::move(check), std::move(graph), 0, true, {}} {}

    void expect(bool ok, const std::string& note)
    {
        ++row_.cases;
        if (!ok && row_.pass) {
            row_.pass = false;
            row_.note = note;
        }
    }
    SelftestRow take() { return std::move(row_); }

  private:
    SelftestRow row_;
};

} // namespace

SelftestReport run_selftest(std::uint64_t seed, std::size_t trials)
{
    SelftestReport report;
    report.seed = seed;
    Rng rng(seed);

    for (auto& [name, graph] : selftest_corpus()) {
        const std::size_t omega = CliqueComplex(graph, graph.vertex_count() + 1).clique_number();
        auto cx = std::make_shared<const CliqueComplex>(graph, std::max<std::size_t>(omega + 2, 4));
        const std::size_t top = omega - 1; // highest degree with nonzero forms

        RowBuilder dd("d-squared", name);
        for (std::size_t t = 0; t < trials; ++t)
            for (std::size_t k = 0; k <= std::min<std::size_t>(top, cx->max_card() - 3); ++k) {
                Form a = random_form(cx, k, rng);
                dd.expect(d(d(a)).is_zero(), "d(d(alpha)) != 0 in degree " + std::to_string(k));
            }
        report.rows.push_back(dd.take());

        RowBuilder leib("graded-leibniz", name);
        RowBuilder anti("anticommutativity", name);
        for (std::size_t t = 0; t < trials; ++t)
            for (std::size_t r = 0; r <= 1; ++r)
                for (std::size_t s = 0; s <= 1; ++s) {
                    if (r + s + 2 > omega)
                        continue;
                    Form a = random_form(cx, r, rng), b = random_form(cx, s, rng);
                    Form rhs = r % 2 == 0 ? wedge(d(a), b) + wedge(a, d(b)) : wedge(d(a), b) - wedge(a, d(b));
                    leib.expect(d(wedge(a, b)) == rhs, "Leibniz fails for degrees " + std::to_string(r) + "," +
                                                            std::to_string(s));
                    Form ba = wedge(b, a);
                    anti.expect(wedge(a, b) == ((r * s) % 2 == 0 ? ba : scale(-1, ba)), "anticommutativity fails");
                }
        report.rows.push_back(leib.take());
        report.rows.push_back(anti.take());

        RowBuilder fast("function-wedge", name);
        for (std::size_t t = 0; t < trials; ++t)
            for (std::size_t k = 0; k <= top; ++k) {
                Form f = random_form(cx, 0, rng), a = random_form(cx, k, rng);
                fast.expect(f_wedge_fast(f, a) == wedge(f, a), "shortcut differs in degree " + std::to_string(k));
            }
        report.rows.push_back(fast.take());

        RowBuilder chain("dchi-chain", name);
        const auto n = static_cast<VertexId>(graph.vertex_count());
        for (VertexId a = 0; a < n; ++a) {
            std::vector<VertexId> one{a};
            chain.expect(dchi_chain(cx, one) == dchi_chain_by_wedges(cx, one), "length 1");
            if (top < 2)
                continue;
            for (VertexId b = 0; b < n; ++b) {
                std::vector<VertexId> two{a, b};
                chain.expect(dchi_chain(cx, two) == dchi_chain_by_wedges(cx, two), "length 2");
            }
        }
        report.rows.push_back(chain.take());

        RowBuilder expand("expansion", name);
        for (std::size_t t = 0; t < trials; ++t)
            for (std::size_t k = 1; k <= top; ++k) {
                Form a = random_form(cx, k, rng);
                expand.expect(expand_reconstruct(a) == a, "reconstruction differs in degree " + std::to_string(k));
            }
        report.rows.push_back(expand.take());

        RowBuilder cut("cutoff", name);
        for (std::size_t k = 0; k + 2 <= omega; ++k)
            for (const auto& c : cx->level(k + 2)) {
                Form a = random_form(cx, k, rng);
                Form rho = cutoff_rho(cx, c);
                cut.expect(d(wedge(rho, a))(c) == d(a)(c), "cut-off changes d at a clique");
            }
        report.rows.push_back(cut.take());

        RowBuilder uniq("uniqueness", name);
        auto audit_cx = std::make_shared<const CliqueComplex>(graph, std::max<std::size_t>(omega + 1, 3));
        AxiomReport ok = audit(exterior_derivative_operator(), audit_cx, 3, seed);
        uniq.expect(ok.all_pass(), "d fails its own audit");
        for (const auto& m : mutant_catalogue(audit_cx)) {
            AxiomReport bad = audit(m, audit_cx, 3, seed);
            // operators that coincide with d on this complex (e.g. a flip on
            // an edge no triangle sees) cannot be rejected
            if (bad.equality_with_d.pass)
                continue;
            uniq.expect(!bad.all_pass(), "mutant " + m.name + " accepted");
        }
        report.rows.push_back(uniq.take());

        RowBuilder coh("cohomology", name);
        auto full = std::make_shared<const CliqueComplex>(CliqueComplex::full(graph));
        auto b = betti(*full);
        long euler_cells = 0, euler_betti = 0;
        for (std::size_t k = 0; k < b.size(); ++k) {
            long sign = k % 2 == 0 ? 1 : -1;
            euler_cells += sign * static_cast<long>(full->level_size(k + 1));
            euler_betti += sign * static_cast<long>(b[k]);
        }
        coh.expect(euler_cells == euler_betti, "Euler characteristic mismatch");
        for (std::size_t k = 0; k + 3 <= full->max_card(); ++k) {
            auto d0 = coboundary_matrix(*full, k).dense();
            auto d1 = coboundary_matrix(*full, k + 1).dense();
            auto prod = multiply(d1, d0, full->level_size(k + 2));
            bool zero = std::all_of(prod.begin(), prod.end(),
                                    [](const auto& row) { return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; }); });
            coh.expect(zero, "D_{k+1} D_k != 0");
        }
        report.rows.push_back(coh.take());
    }
    return report;
}

} // namespace gext
