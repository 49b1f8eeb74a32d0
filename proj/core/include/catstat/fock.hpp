#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "catstat/fock_vector.hpp"
#include "catstat/model.hpp"
#include "catstat/report.hpp"

namespace catstat {

/// Sector computations refuse to enumerate more than this many words.
inline constexpr std::int64_t kMaxSectorWords = 100000;
inline constexpr std::size_t kDefaultMaxSector = 5;

/// N^n, raising ResourceGuard when it exceeds kMaxSectorWords.
std::size_t sector_size(std::size_t generators, std::size_t n);

/// All words of length n in lexicographic order, which is also the order of
/// Gram matrix rows: word w sits at index sum_k w_k N^{n-1-k}.
std::vector<Word> basis_words(std::size_t generators, std::size_t n);
std::size_t word_index(const Word& w, std::size_t generators);

// Elementary operators. Generator indices are 0-based; all act linearly.

/// b+_i = a+_i: prepends letter i.
FockVector create(const ParticleModel& model, std::size_t i, const FockVector& v);

/// a-_i: pairs with the first letter only; the vacuum goes to zero.
FockVector annihilate_free(const ParticleModel& model, std::size_t i, const FockVector& v);

/// b-_i: hopping expansion. x^{*i} moves rightwards through the word using
/// the cross symmetry and is paired with each letter in turn.
FockVector annihilate_twisted(const ParticleModel& model, std::size_t i, const FockVector& v);

/// Psi at positions k, k+1.
FockVector exchange(const ParticleModel& model, std::size_t k, const FockVector& v);

namespace step {
struct Create { std::size_t generator; };
struct AnnihilateFree { std::size_t generator; };
struct AnnihilateTwisted { std::size_t generator; };
struct Exchange { std::size_t position; };
struct Scale { Complex factor; };
}  // namespace step

using ProcessStep = std::variant<step::Create, step::AnnihilateFree, step::AnnihilateTwisted,
                                 step::Exchange, step::Scale>;
using ProcessProgram = std::vector<ProcessStep>;

/// Applies the steps left to right; a run of Create steps realizes the
/// composite creation operator of the concatenated word.
FockVector apply_program(const ParticleModel& model, const ProcessProgram& program, const FockVector& v);

/// a-_i a+_j = <i|j> id on all words up to n_max.
CheckReport check_infinite_statistics(const ParticleModel& model, std::size_t n_max,
                                      double tol = kDefaultTolerance);

/// max over words w of length n of
/// |(b-_i b+_j - sum_kl T^{ij}_{kl} b+_l b-_k - <i|j>) w|.
double commutator_defect_value(const ParticleModel& model, std::size_t i, std::size_t j, std::size_t n);
CheckReport commutator_defect(const ParticleModel& model, std::size_t i, std::size_t j, std::size_t n,
                              double tol = kDefaultTolerance);

/// commutator_defect for every (i, j) and every sector 0..n_max, as one check.
CheckReport check_commutators(const ParticleModel& model, std::size_t n_max,
                              double tol = kDefaultTolerance);

/// Exchange relations of the braided case: c+c+, c-c- and mixed c-c+ (i != j)
/// lines. Each defect vector must lie in the kernel of its sector Gram matrix.
CheckReport check_braid_exchange_relations(const ParticleModel& model, std::size_t n_max,
                                           double tol = kDefaultTolerance);

struct GramMatrix {
  std::size_t generators = 0;
  std::size_t sector = 0;
  std::vector<Word> basis;
  Eigen::MatrixXcd matrix;
  double max_asymmetry = 0.0;  // max |G - G^H|

  bool is_hermitian(double tol = kDefaultTolerance) const { return max_asymmetry <= tol; }
};

/// entry(w, w') = vacuum amplitude of b-_{w_n} ... b-_{w_1} w'. Different
/// sectors are orthogonal.
GramMatrix gram_matrix(const ParticleModel& model, std::size_t n);

/// Gram matrices for sectors 0..n_max, each built from the previous one.
std::vector<GramMatrix> gram_matrices(const ParticleModel& model, std::size_t n_max);

/// Residual |G v| of a vector restricted to one sector, the kernel test used
/// for null states.
double gram_residual(const GramMatrix& gram, const FockVector& v);

struct SectorDimension {
  std::size_t full = 0;
  std::size_t quotient = 0;
};

/// Rank counts singular values >= tol * max(1, sigma_max). Raises Hermiticity
/// when the Gram matrix is not Hermitian within tol.
SectorDimension sector_dimension(const GramMatrix& gram, double tol = kDefaultTolerance);
SectorDimension sector_dimension(const ParticleModel& model, std::size_t n, double tol = kDefaultTolerance);

struct PsdReport {
  CheckReport report;
  std::optional<double> min_eigenvalue;
};

/// Pass iff the smallest eigenvalue is >= -tol; skipped on non-Hermitian Gram.
PsdReport gram_psd_check(const GramMatrix& gram, double tol = kDefaultTolerance);
PsdReport gram_psd_check(const ParticleModel& model, std::size_t n, double tol = kDefaultTolerance);

}  // namespace catstat
