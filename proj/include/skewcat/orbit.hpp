#pragma once

#include "skewcat/graded.hpp"

namespace skewcat {

/* ℤ-quotients of the category of bounded complexes over k by powers of the
 * shift functor. The orbit hom in each degree is the finite sum over i of the
 * homology of the mapping complex into the (n·i)-fold shift of the target. */

// (K[n])_i = K_{i-n}; the shifted differential picks up the sign (-1)^n
ChainComplex shift_complex(const ChainComplex& k, int n);

// Hom_d = ⊕_i Hom(K_i, L_{i+d}) with differential D(f) = d_L∘f - (-1)^{|f|} f∘d_K.
// Basis ordering within degree d: source degrees i ascending, then source
// index s, then target index r.
ChainComplex hom_complex(const ChainComplex& k, const ChainComplex& l);

struct OrbitHomQuery {
    ChainComplex source;
    ChainComplex target;
    int period = 1;  // nonzero
    int window_lo = 0;
    int window_hi = 0;  // inclusive
};

// per degree d in the window: Σ_i dim H_d(hom(K, L[n·i])); throws on period 0
GradedDims orbit_hom_dims(const OrbitHomQuery& q);

// dim 1 at every multiple of n inside the window
GradedDims laurent_dims(int n, int window_lo, int window_hi);

/* A component morphism of the orbit category: an element of the hom complex
 * Map(K, L[n·index]) of degree map.shift(). */
struct OrbitComponent {
    long long index = 0;
    GradedMap map;
};

// view a graded map L -> M as a map L[n] -> M[n]; blocks reindex, no signs
GradedMap shift_graded_map(const GradedMap& g, int n);

// (i, f) then (j, g) composes to (i + j, f followed by the (n·i)-shift of g)
OrbitComponent orbit_compose(const OrbitComponent& f, const OrbitComponent& g, int period);

}  // namespace skewcat
