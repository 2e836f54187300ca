#include "ddbar/diamond.hpp"

#include <fstream>
#include <sstream>

#include "ddbar/errors.hpp"

namespace ddbar {

long long HodgeDiamond::total() const {
    long long t = 0;
    for (const auto& row : h)
        for (long long v : row) t += v;
    return t;
}

Diamond make_diamond(int n) {
    Diamond d;
    d.hodge.n = n;
    d.hodge.h.assign(n + 1, std::vector<long long>(n + 1, 0));
    d.betti.n = n;
    d.betti.b.assign(2 * n + 1, 0);
    return d;
}

Diamond point_diamond() {
    Diamond d = make_diamond(0);
    d.hodge.h[0][0] = 1;
    d.betti.b[0] = 1;
    return d;
}

Diamond blowup_diamond(const Diamond& ambient, const Diamond& center, int codim) {
    if (codim < 1)
        throw DimensionMismatch("blow-up codimension must be >= 1");
    if (center.dim() != ambient.dim() - codim)
        throw DimensionMismatch("center dimension " + std::to_string(center.dim()) +
                                " does not equal ambient dimension " +
                                std::to_string(ambient.dim()) + " minus codimension " +
                                std::to_string(codim));
    Diamond out = ambient;
    for (int p = 0; p <= out.dim(); ++p)
        for (int q = 0; q <= out.dim(); ++q)
            for (int j = 1; j < codim; ++j)
                out.hodge.h[p][q] += center.hodge.at(p - j, q - j);
    for (int m = 0; m <= 2 * out.dim(); ++m)
        for (int j = 1; j < codim; ++j)
            out.betti.b[m] += center.betti.at(m - 2 * j);
    return out;
}

Diamond projectivize(const Diamond& base, int rank) {
    if (rank < 1) throw DimensionMismatch("bundle rank must be >= 1");
    Diamond out = make_diamond(base.dim() + rank - 1);
    for (int p = 0; p <= out.dim(); ++p)
        for (int q = 0; q <= out.dim(); ++q)
            for (int j = 0; j < rank; ++j)
                out.hodge.h[p][q] += base.hodge.at(p - j, q - j);
    for (int m = 0; m <= 2 * out.dim(); ++m)
        for (int j = 0; j < rank; ++j)
            out.betti.b[m] += base.betti.at(m - 2 * j);
    return out;
}

bool check_hodge_structure(const HodgeDiamond& h, const BettiVector& b) {
    if (h.n != b.n) return false;
    for (int p = 0; p <= h.n; ++p)
        for (int q = 0; q <= h.n; ++q)
            if (h.at(p, q) != h.at(q, p)) return false;
    for (int k = 0; k <= 2 * h.n; ++k) {
        long long sum = 0;
        for (int p = 0; p <= h.n; ++p) sum += h.at(p, k - p);
        if (sum != b.at(k)) return false;
    }
    return true;
}

Diamond diamond_from_report(const CohomologyReport& r) {
    Diamond d = make_diamond(static_cast<int>(r.n));
    for (unsigned p = 0; p <= r.n; ++p)
        for (unsigned q = 0; q <= r.n; ++q)
            d.hodge.h[p][q] = static_cast<long long>(r.hodge[p][q]);
    for (unsigned k = 0; k <= 2 * r.n; ++k)
        d.betti.b[k] = static_cast<long long>(r.betti[k]);
    return d;
}

namespace {

std::vector<long long> parse_numbers(const std::string& line, int lineno,
                                     size_t expect) {
    std::vector<long long> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            if (v < 0)
                throw ParseError(lineno, 1, "dimension entries must be nonnegative");
            out.push_back(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(lineno, 1, "expected an integer, got '" + tok + "'");
        }
    }
    if (out.size() != expect)
        throw ParseError(lineno, 1,
                         "expected " + std::to_string(expect) + " entries, got " +
                             std::to_string(out.size()));
    return out;
}

}  // namespace

Diamond parse_diamond(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        bool blank = raw.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) lines.emplace_back(no, raw);
    }
    if (lines.empty()) throw ParseError(1, 1, "empty diamond file");
    auto first = parse_numbers(lines[0].second, lines[0].first, 1);
    int n = static_cast<int>(first[0]);
    if (n < 0 || n > 64) throw ParseError(lines[0].first, 1, "unreasonable dimension");
    if (lines.size() != static_cast<size_t>(n) + 3)
        throw ParseError(lines.back().first, 1,
                         "expected " + std::to_string(n + 3) + " content lines");
    Diamond d = make_diamond(n);
    for (int p = 0; p <= n; ++p) {
        auto row = parse_numbers(lines[p + 1].second, lines[p + 1].first,
                                 static_cast<size_t>(n) + 1);
        for (int q = 0; q <= n; ++q) d.hodge.h[p][q] = row[q];
    }
    auto betti = parse_numbers(lines[n + 2].second, lines[n + 2].first,
                               static_cast<size_t>(2 * n) + 1);
    for (int k = 0; k <= 2 * n; ++k) d.betti.b[k] = betti[k];
    return d;
}

Diamond read_diamond_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open diamond file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diamond(buf.str());
}

std::string write_diamond(const Diamond& d) {
    std::ostringstream out;
    out << d.dim() << "\n";
    for (int p = 0; p <= d.dim(); ++p) {
        for (int q = 0; q <= d.dim(); ++q) out << (q ? " " : "") << d.hodge.h[p][q];
        out << "\n";
    }
    for (int k = 0; k <= 2 * d.dim(); ++k) out << (k ? " " : "") << d.betti.b[k];
    out << "\n";
    return out.str();
}

}  // namespace ddbar
