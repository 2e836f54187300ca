#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddbar/cyclotomic.hpp"

namespace ddbar {

/*
 * The bigraded exterior algebra on holomorphic generators phi^1..phi^n and
 * their conjugates bphi^1..bphi^n.
 *
 * A canonical monomial phi^I ^ bphi^J keeps all holomorphic factors before
 * all antiholomorphic ones, each block with strictly ascending indices; the
 * index sets are stored as bitmasks (bit i-1 = generator i), which makes
 * repeated-index detection and permutation-sign counting popcount work.
 */
struct Monomial {
    uint32_t holo = 0;
    uint32_t anti = 0;

    int holo_degree() const { return std::popcount(holo); }
    int anti_degree() const { return std::popcount(anti); }
    int degree() const { return holo_degree() + anti_degree(); }
    std::pair<int, int> bidegree() const { return {holo_degree(), anti_degree()}; }

    bool operator==(const Monomial& o) const { return holo == o.holo && anti == o.anti; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// Lexicographic order on index subsets read as ascending sequences
/// ({1,4} < {2,3}, and a proper prefix precedes its extensions).
bool subset_lex_less(uint32_t a, uint32_t b);

/// Strict order on monomials: by bidegree (total degree, then holomorphic
/// degree), then lexicographic on the holomorphic and antiholomorphic index
/// sets. Within a fixed bidegree this is exactly the basis order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Parity of the permutation interleaving two disjoint ascending index sets
/// (a first, then b) into one ascending sequence; +1 or -1.
int merge_sign(uint32_t a, uint32_t b);

/// Wedge of canonical monomials: {0, anything} when an index repeats,
/// otherwise {sign, union} with the permutation sign into canonical order.
std::pair<int, Monomial> wedge_monomials(const Monomial& a, const Monomial& b);

/// All monomials of bidegree (p,q) on n generators in lexicographic order;
/// this order is the basis contract used by every matrix construction.
std::vector<Monomial> bidegree_basis(unsigned n, int p, int q);

/*
 * A finite linear combination of canonical monomials over Q(zeta_N). Zero
 * coefficients are never stored; the empty combination is the zero form.
 * Forms are immutable values; all operations are pure.
 */
class Form {
public:
    using TermMap = std::map<Monomial, Cyclotomic, MonomialOrder>;

    Form() : n_(0), order_(1) {}
    Form(unsigned n, unsigned order) : n_(n), order_(order) {}

    static Form zero(unsigned n, unsigned order) { return Form(n, order); }
    static Form monomial(unsigned n, unsigned order, Monomial m);
    static Form monomial(unsigned n, unsigned order, Monomial m, Cyclotomic coeff);
    /// The scalar c regarded as a 0-form.
    static Form scalar(unsigned n, unsigned order, Cyclotomic c);
    /// phi^i (1-based index).
    static Form generator(unsigned n, unsigned order, unsigned i);
    /// bphi^i (1-based index).
    static Form conj_generator(unsigned n, unsigned order, unsigned i);

    unsigned generators() const { return n_; }
    unsigned order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Cyclotomic coefficient(const Monomial& m) const;

    /// Bidegree when the form is bihomogeneous and nonzero; nullopt for the
    /// zero form (which is homogeneous of every bidegree) or mixed forms.
    std::optional<std::pair<int, int>> bidegree() const;
    bool is_bihomogeneous() const;
    /// Nonzero and homogeneous of exactly (p,q).
    bool has_bidegree(int p, int q) const;

    Form operator-() const;
    Form operator+(const Form& rhs) const;
    Form operator-(const Form& rhs) const;
    Form scaled(const Cyclotomic& c) const;

    /// Adds c * m into this form (mutating helper for builders).
    void add_term(const Monomial& m, const Cyclotomic& c);

    bool operator==(const Form& rhs) const;
    bool operator!=(const Form& rhs) const { return !(*this == rhs); }

    /// Shorthand rendering, e.g. "phi[1 2 ~3] - phi[3 ~1 ~2]"; "0" for zero.
    std::string str() const;

private:
    void check_compatible(const Form& rhs) const;

    unsigned n_;
    unsigned order_;
    TermMap terms_;
};

/// Bilinear extension of the monomial wedge; GeneratorCountMismatch /
/// OrderMismatch when the two forms live in different algebras.
Form wedge(const Form& a, const Form& b);

/// Conjugation: phi^I ^ bphi^J |-> conj(c) * (-1)^(|I||J|) phi^J ^ bphi^I.
/// An involution swapping bidegrees (p,q) <-> (q,p), multiplicative on wedges.
Form conjugate_form(const Form& a);

std::string monomial_str(const Monomial& m);

}  // namespace ddbar
