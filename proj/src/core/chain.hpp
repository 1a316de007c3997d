#pragma once

#include <map>
#include <vector>

#include "core/matrix.hpp"

namespace arrowsmith {

/// Bounded chain complex: spaces C_n for n in [lo, hi] with differentials
/// d_n : C_n -> C_(n-1), d o d = 0 enforced on construction.  Degrees
/// outside the stored range are zero; accessors work for every n, so
/// complexes that only differ by zero padding behave identically.
class ChainComplex {
public:
    ChainComplex(Field field, int lo, std::vector<std::size_t> dims,
                 std::map<int, Matrix> diffs = {});

    static ChainComplex zero(Field field) { return ChainComplex(field, 0, {}); }
    static ChainComplex concentrated(Field field, int degree, std::size_t dim);

    /// Shape-checks only; d o d = 0 is left to validators.  For parsers,
    /// so that a broken input file can still be loaded and reported on.
    static ChainComplex unchecked(Field field, int lo, std::vector<std::size_t> dims,
                                  std::map<int, Matrix> diffs);

    bool d_squared_zero() const;

    const Field& field() const { return field_; }
    bool has_support() const { return !dims_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }

    std::size_t dim(int n) const;
    /// d_n as a dim(n-1) x dim(n) matrix for any n.
    Matrix d(int n) const;

    std::size_t total_dim() const;

    /// Equal as graded objects with differentials, ignoring zero padding.
    bool operator==(const ChainComplex& other) const;

private:
    ChainComplex(Field field, int lo, std::vector<std::size_t> dims, std::map<int, Matrix> diffs,
                 bool check);

    Field field_;
    int lo_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> diffs_;  // diffs_[k] = d at degree lo_+k
};

/// Degreewise map commuting with the differentials.
class ChainMap {
public:
    ChainMap(ChainComplex src, ChainComplex dst, std::map<int, Matrix> components);

    static ChainMap zero(ChainComplex src, ChainComplex dst);
    static ChainMap identity(const ChainComplex& c);

    /// Shape-checks only; the chain condition is left to validators.
    static ChainMap unchecked(ChainComplex src, ChainComplex dst,
                              std::map<int, Matrix> components);

    bool chain_condition_holds() const;

    const ChainComplex& src() const { return src_; }
    const ChainComplex& dst() const { return dst_; }
    const Field& field() const { return src_.field(); }

    /// Component at degree n as a dst.dim(n) x src.dim(n) matrix.
    Matrix component(int n) const;

    bool operator==(const ChainMap& other) const;

private:
    ChainMap(ChainComplex src, ChainComplex dst, std::map<int, Matrix> components, bool check);

    ChainComplex src_, dst_;
    int lo_ = 0;
    std::vector<Matrix> comps_;
};

ChainMap compose(const ChainMap& outer, const ChainMap& inner);
ChainMap add(const ChainMap& a, const ChainMap& b);

/// (degree, dim H_degree) for every degree in the support range.
std::vector<std::pair<int, std::size_t>> homology(const ChainComplex& c);
std::size_t homology_dim(const ChainComplex& c, int n);
bool is_acyclic(const ChainComplex& c);

/// C[s]: shift up by s, differential scaled by (-1)^s.
ChainComplex shift(const ChainComplex& c, int s);

/// Tensor product with Koszul signs: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
/// Summands of degree n are laid out by ascending left degree.
ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d);
ChainMap tensor_map(const ChainMap& f, const ChainMap& g);

/// The regrouping permutation ((A (x) B) (x) C -> A (x) (B (x) C)); no signs.
ChainMap tensor_associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c);

struct ConeResult {
    ChainComplex cone;  // cone_n = X_(n-1) + Y_n, d = [[-dX, 0], [-f, dY]]
    ChainMap incl;      // Y -> cone
    ChainMap proj;      // cone -> X[1]
};
ConeResult cone(const ChainMap& f);

struct FiberResult {
    ChainComplex fiber;  // fiber_n = X_n + Y_(n+1), d = [[dX, 0], [f, -dY]]
    ChainMap proj;       // fiber -> X
};
FiberResult fiber(const ChainMap& f);

bool is_quasi_iso(const ChainMap& f);

/// A commuting square of chain maps between two arrows f, g.
struct ChainArrowMorphism {
    ChainMap src, dst;      // the two arrow objects
    ChainMap comp0, comp1;  // between domains / codomains

    bool commutes() const;
};

bool arrow_weq(const ChainArrowMorphism& alpha);
bool componentwise_cof(const ChainArrowMorphism& alpha);  // degreewise mono in both components
bool componentwise_fib(const ChainArrowMorphism& alpha);  // degreewise epi in both components

/// Canonical comparison X -> hofib(hocofib(f)), a weak equivalence in any
/// stable situation.
ChainMap stable_unit_comparison(const ChainMap& f);
bool stable_unit_check(const ChainMap& f);

/// Dual comparison hocofib(hofib(g)) -> Y.
ChainMap stable_counit_comparison(const ChainMap& g);
bool stable_counit_check(const ChainMap& g);

struct ChainBoxProduct {
    ChainMap arrow;   // P -> X1 (x) Y1
    ChainMap from01;  // X0 (x) Y1 -> P
    ChainMap from10;  // X1 (x) Y0 -> P
};

/// Pushout product of chain maps, built degreewise.
ChainBoxProduct pushout_product_chain(const ChainMap& f, const ChainMap& g);

/// The space of chain maps src -> dst as the kernel of one linear system;
/// columns stack rvec(f_n) by ascending degree over the shared support.
Matrix chain_hom_basis(const ChainComplex& src, const ChainComplex& dst);
ChainMap chain_map_from_vector(const ChainComplex& src, const ChainComplex& dst,
                               const Matrix& coords);

}  // namespace arrowsmith
