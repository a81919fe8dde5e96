#pragma once

#include <string>
#include <vector>

#include "hopfoid/check.hpp"
#include "hopfoid/linalg.hpp"

namespace hopfoid {

/// Unital algebra given by structure constants: mult sends e_i ⊗ e_j
/// (flat index i·dim + j) to the product.
struct FinAlgebra {
  std::vector<std::string> labels;
  LinMap mult;
  Vec unit;

  std::size_t dim() const { return labels.size(); }
  Vec basis(std::size_t i) const { return Vec::basis(dim(), i); }
  const Vec& product(std::size_t i, std::size_t j) const { return mult.column(i * dim() + j); }
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Throws DimensionMismatch if the tables do not fit dim().
  void check_shapes() const;
};

struct FinCoalgebra {
  LinMap comult;  // dim → dim²
  LinMap counit;  // dim → 1

  std::size_t dim() const { return comult.src_dim(); }
  void check_shapes() const;
};

class FinHopf {
 public:
  FinHopf() = default;
  FinHopf(FinAlgebra algebra, FinCoalgebra coalgebra, LinMap antipode);

  std::size_t dim() const { return algebra_.dim(); }
  const FinAlgebra& algebra() const { return algebra_; }
  const FinCoalgebra& coalgebra() const { return coalgebra_; }
  const LinMap& antipode() const { return antipode_; }
  const LinMap& antipode_squared() const { return antipode_sq_; }
  const std::vector<std::string>& labels() const { return algebra_.labels; }

  Vec one() const { return algebra_.unit; }
  Vec basis(std::size_t i) const { return algebra_.basis(i); }
  Vec multiply(const Vec& a, const Vec& b) const { return algebra_.multiply(a, b); }
  const Vec& product(std::size_t i, std::size_t j) const { return algebra_.product(i, j); }
  const Vec& coproduct(std::size_t i) const { return coalgebra_.comult.column(i); }
  Rational counit(std::size_t i) const { return coalgebra_.counit.column(i).at(0); }
  Rational counit(const Vec& v) const;
  const Vec& S(std::size_t i) const { return antipode_.column(i); }
  const Vec& S2(std::size_t i) const { return antipode_sq_.column(i); }

 private:
  FinAlgebra algebra_;
  FinCoalgebra coalgebra_;
  LinMap antipode_;
  LinMap antipode_sq_;
};

CheckReport verify_algebra(const FinAlgebra& a, const VerifyOptions& options = {});
CheckReport verify_coalgebra(const FinCoalgebra& c, const VerifyOptions& options = {});
CheckReport verify_bialgebra(const FinHopf& h, const VerifyOptions& options = {});
CheckReport verify_antipode(const FinHopf& h, const VerifyOptions& options = {});
/// S(ab) = S(b)S(a) on basis pairs.
CheckReport verify_antipode_antihom(const FinHopf& h, const VerifyOptions& options = {});
CheckReport verify_antipode_invertible(const FinHopf& h, const VerifyOptions& options = {});
/// All Hopf sweeps as parts of one report.
CheckReport validate_hopf(const FinHopf& h, const VerifyOptions& options = {});

/// Throws AntipodeNotInvertible when S is singular.
LinMap antipode_inverse(const FinHopf& h);

/// Checks that f is multiplicative and unital: f(ab) = f(a)f(b), f(1) = 1.
CheckReport verify_homomorphism(std::string name, const FinAlgebra& src, const FinAlgebra& dst, const LinMap& f,
                                const VerifyOptions& options = {});
/// f(ab) = f(b)f(a), f(1) = 1.
CheckReport verify_antihomomorphism(std::string name, const FinAlgebra& src, const FinAlgebra& dst,
                                    const LinMap& f, const VerifyOptions& options = {});

/// Tensor product algebra A ⊗ B with componentwise multiplication.
FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);
/// Opposite algebra.
FinAlgebra opposite(const FinAlgebra& a);

}  // namespace hopfoid
