#include "ddbar/report_io.hpp"

#include <sstream>

#include "ddbar/errors.hpp"

namespace ddbar {

namespace {

std::string field_name(unsigned order) {
    if (order == 1) return "Q";
    return "Q(zeta_" + std::to_string(order) + ")";
}

const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

}  // namespace

std::string render_table(const CohomologyReport& r) {
    std::ostringstream out;
    out << "manifold: " << r.name << "\n";
    out << "n: " << r.n << "   field: " << field_name(r.field_order) << "\n";
    out << "\n";
    out << " (p,q)  dolbeault  conj-dolbeault  bott-chern  aeppli\n";
    for (unsigned p = 0; p <= r.n; ++p)
        for (unsigned q = 0; q <= r.n; ++q) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), " (%u,%u)  %9zu  %14zu  %10zu  %6zu\n",
                          p, q, r.hodge[p][q], r.hodge_conj[p][q], r.bc[p][q],
                          r.aeppli[p][q]);
            out << buf;
        }
    out << "\n";
    out << "betti:";
    for (size_t b : r.betti) out << " " << b;
    out << "\n";
    out << "frolicher E1: " << (r.frolicher_e1 ? "degenerate" : "non-degenerate")
        << "\n";
    out << "ddbar: " << pass_fail(r.verdict_numeric) << " (numeric), "
        << pass_fail(r.verdict_direct) << " (direct)\n";
    if (r.representatives) {
        out << "\nrepresentatives (dolbeault):\n";
        for (unsigned p = 0; p <= r.n; ++p)
            for (unsigned q = 0; q <= r.n; ++q) {
                const auto& reps = (*r.representatives)[p][q];
                if (reps.empty()) continue;
                out << "  (" << p << "," << q << "):";
                bool first = true;
                for (const Form& f : reps) {
                    out << (first ? " " : ", ") << f.str();
                    first = false;
                }
                out << "\n";
            }
    }
    return out.str();
}

nlohmann::json report_to_json(const CohomologyReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["field_order"] = r.field_order;
    j["hodge"] = r.hodge;
    j["bott_chern"] = r.bc;
    j["aeppli"] = r.aeppli;
    j["betti"] = r.betti;
    j["verdict_numeric"] = r.verdict_numeric;
    j["verdict_direct"] = r.verdict_direct;
    j["frolicher_e1"] = r.frolicher_e1;
    return j;
}

CohomologyReport report_from_json(const nlohmann::json& j) {
    CohomologyReport r;
    try {
        r.name = j.at("name").get<std::string>();
        r.n = j.at("n").get<unsigned>();
        r.field_order = j.at("field_order").get<unsigned>();
        r.hodge = j.at("hodge").get<DimGrid>();
        r.bc = j.at("bott_chern").get<DimGrid>();
        r.aeppli = j.at("aeppli").get<DimGrid>();
        r.betti = j.at("betti").get<std::vector<size_t>>();
        r.verdict_numeric = j.at("verdict_numeric").get<bool>();
        r.verdict_direct = j.at("verdict_direct").get<bool>();
        r.frolicher_e1 = j.at("frolicher_e1").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("malformed report JSON: ") + e.what());
    }
    auto expect_grid = [&](const DimGrid& g, const char* which) {
        if (g.size() != r.n + 1)
            throw ParseError(1, 1, std::string(which) + " grid has wrong row count");
        for (const auto& row : g)
            if (row.size() != r.n + 1)
                throw ParseError(1, 1, std::string(which) + " grid has wrong row width");
    };
    expect_grid(r.hodge, "hodge");
    expect_grid(r.bc, "bott_chern");
    expect_grid(r.aeppli, "aeppli");
    if (r.betti.size() != 2 * static_cast<size_t>(r.n) + 1)
        throw ParseError(1, 1, "betti vector has wrong length");
    // the conjugate grid is forced by the real structure
    r.hodge_conj.assign(r.n + 1, std::vector<size_t>(r.n + 1, 0));
    for (unsigned p = 0; p <= r.n; ++p)
        for (unsigned q = 0; q <= r.n; ++q) r.hodge_conj[p][q] = r.hodge[q][p];
    return r;
}

bool same_report(const CohomologyReport& a, const CohomologyReport& b) {
    return a.name == b.name && a.n == b.n && a.field_order == b.field_order &&
           a.hodge == b.hodge && a.bc == b.bc && a.aeppli == b.aeppli &&
           a.betti == b.betti && a.verdict_numeric == b.verdict_numeric &&
           a.verdict_direct == b.verdict_direct && a.frolicher_e1 == b.frolicher_e1;
}

std::string render_quotient_section(const Bicomplex& sub, size_t group_order,
                                    const std::vector<DifferentialRelation>& rels) {
    std::ostringstream out;
    out << "group order: " << group_order << "\n";
    out << "invariant dims:\n";
    for (unsigned p = 0; p <= sub.n; ++p)
        for (unsigned q = 0; q <= sub.n; ++q)
            out << "  (" << p << "," << q << ") " << sub.dims[p][q] << "\n";
    out << "invariant basis:\n";
    for (unsigned p = 0; p <= sub.n; ++p)
        for (unsigned q = 0; q <= sub.n; ++q) {
            if (sub.labels[p][q].empty()) continue;
            out << "  (" << p << "," << q << "):";
            bool first = true;
            for (const Form& f : sub.labels[p][q]) {
                out << (first ? " " : ", ") << f.str();
                first = false;
            }
            out << "\n";
        }
    out << "differentials:\n";
    if (rels.empty()) out << "  (none)\n";
    for (const auto& rel : rels)
        out << "  d " << rel.element.str() << " = " << rel.value.str() << "\n";
    return out.str();
}

}  // namespace ddbar
