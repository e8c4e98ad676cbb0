#pragma once

#include <string>
#include <vector>

#include "conjlat/galois.hpp"
#include "conjlat/lattice.hpp"
#include "conjlat/svp.hpp"

namespace conjlat {

struct Flag {
  tri value = tri::undetermined;
  std::string by;  // criterion name or "enumeration"
};

struct LatticeCertificate {
  int rank = 0;
  Int min_norm_sq = 0;
  int kissing = 0;
  Flag is_wr;
  Flag is_gwr;
  Flag is_nearly_orthogonal;
  Flag has_minimal_basis;
  Int determinant = 0;  // det of the (reduced) Gram matrix
  std::vector<std::string> notes;
};

// Enumeration-backed certification of WR / GWR / nearly-orthogonal /
// minimal-basis for a positive definite Gram matrix.
LatticeCertificate certify(const GramMatrix& g, const MinimalVectorSet& mv);

struct PlanarWR {
  bool is_wr = false;
  std::string minimal_vectors;  // description of S(L_f)
  std::string automorphisms;
};

// Closed-form planar criterion a_1^2 >= 2 max{3 a_0 a_2, -a_0 a_2} for an
// irreducible quadratic with a_1 != 0.
PlanarWR planar_wr(const Int& a2, const Int& a1, const Int& a0);

struct CubicWR {
  tri wr_by_criterion = tri::undetermined;
  tri roots_are_minimal = tri::undetermined;
  std::string note;
};

// One-directional cubic criteria: WR when A < 3 a_2^2 and B < A/2; the
// root vectors are minimal when additionally |B| < A/3.
CubicWR cubic_wr(const IntPolynomial& f);

// Kissing-number divisibility law for prime degree: when
// min_norm_sq < d * a_{n-1}^2, |S(L_f)| must be divisible by n.
bool divisibility_check(const LatticeCertificate& cert, const IntPolynomial& f,
                        const GaloisClass& g, std::string* note = nullptr);

// The Galois action must be an isometry of every correctly built Gram; a
// failure here is a construction bug, reported as inconsistency_error.
bool verify_galois_isometry(const GramMatrix& g, const GaloisClass& cls);

// Coherence bound (sqrt((n-2)^2+16(n-1)) - (n-2)) / (8(n-1)) and the
// matching threshold 8 d (n-1) / (sqrt((n-2)^2+16(n-1)) - (n-2)).
double coherence_bound(int n);
double t_threshold(int n, const Int& d);

}  // namespace conjlat
