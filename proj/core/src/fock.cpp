#include "catstat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "catstat/error.hpp"

namespace catstat {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_generator(const ParticleModel& model, std::size_t i) {
  if (i >= model.generator_count()) {
    raise(ErrorKind::OutOfRange, "generator index " + std::to_string(i + 1) + " outside 1.." +
                                     std::to_string(model.generator_count()));
  }
}

void check_letters(const ParticleModel& model, const Word& w) {
  for (auto letter : w) check_generator(model, letter);
}

// Moves x^{*dual} rightwards from position pos, pairing it with each letter it
// reaches. prefix holds the letters already passed (after their cross moves).
void hop(const ParticleModel& model, std::size_t dual, const Word& w, std::size_t pos, Word& prefix,
         Complex coeff, double sign, FockVector& out) {
  if (pos == w.size()) return;
  const Complex g = model.pairing(dual, w[pos]);
  if (g != Complex{}) {
    Word rest = prefix;
    rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
    out.add(rest, coeff * g);
  }
  for (const auto& term : model.cross_terms(dual, w[pos])) {
    prefix.push_back(term.letter);
    hop(model, term.dual, w, pos + 1, prefix, coeff * sign * term.coeff, sign, out);
    prefix.pop_back();
  }
}

FockVector twisted_on_word(const ParticleModel& model, std::size_t i, const Word& w) {
  FockVector out;
  Word prefix;
  prefix.reserve(w.size());
  const double sign = model.expansion_sign() == ExpansionSign::Plus ? 1.0 : -1.0;
  hop(model, i, w, 0, prefix, 1.0, sign, out);
  return out;
}

std::string pair_witness(std::size_t i, std::size_t j, const Word& w) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") on " + word_to_string(w, 1);
}

// Grows the Gram list until it covers sector n.
const GramMatrix& gram_for(const ParticleModel& model, std::vector<GramMatrix>& cache, std::size_t n) {
  if (cache.size() <= n) cache = gram_matrices(model, n);
  return cache[n];
}

}  // namespace

std::size_t sector_size(std::size_t generators, std::size_t n) {
  std::int64_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    size *= static_cast<std::int64_t>(generators);
    if (size > kMaxSectorWords) {
      raise(ErrorKind::ResourceGuard, "sector " + std::to_string(n) + " with " + std::to_string(generators) +
                                          " generators exceeds " + std::to_string(kMaxSectorWords) +
                                          " basis words");
    }
  }
  return static_cast<std::size_t>(size);
}

std::vector<Word> basis_words(std::size_t generators, std::size_t n) {
  const auto count = sector_size(generators, n);
  std::vector<Word> out;
  out.reserve(count);
  Word w(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    out.push_back(w);
    for (std::size_t k = n; k > 0; --k) {
      if (++w[k - 1] < generators) break;
      w[k - 1] = 0;
    }
  }
  return out;
}

std::size_t word_index(const Word& w, std::size_t generators) {
  std::size_t idx = 0;
  for (auto letter : w) idx = idx * generators + letter;
  return idx;
}

FockVector create(const ParticleModel& model, std::size_t i, const FockVector& v) {
  check_generator(model, i);
  FockVector out;
  for (const auto& [w, a] : v.terms()) {
    Word nw;
    nw.reserve(w.size() + 1);
    nw.push_back(i);
    nw.insert(nw.end(), w.begin(), w.end());
    out.add(nw, a);
  }
  return out;
}

FockVector annihilate_free(const ParticleModel& model, std::size_t i, const FockVector& v) {
  check_generator(model, i);
  FockVector out;
  for (const auto& [w, a] : v.terms()) {
    if (w.empty()) continue;
    check_letters(model, w);
    const Complex g = model.pairing(i, w.front());
    if (g == Complex{}) continue;
    out.add(Word(w.begin() + 1, w.end()), a * g);
  }
  return out;
}

FockVector annihilate_twisted(const ParticleModel& model, std::size_t i, const FockVector& v) {
  check_generator(model, i);
  FockVector out;
  for (const auto& [w, a] : v.terms()) {
    check_letters(model, w);
    out.add(twisted_on_word(model, i, w), a);
  }
  return out;
}

FockVector exchange(const ParticleModel& model, std::size_t k, const FockVector& v) {
  return braid_on_vector(model, v, k);
}

FockVector apply_program(const ParticleModel& model, const ProcessProgram& program, const FockVector& v) {
  FockVector state = v;
  for (const auto& s : program) {
    state = std::visit(
        overloaded{
            [&](const step::Create& c) { return create(model, c.generator, state); },
            [&](const step::AnnihilateFree& a) { return annihilate_free(model, a.generator, state); },
            [&](const step::AnnihilateTwisted& b) { return annihilate_twisted(model, b.generator, state); },
            [&](const step::Exchange& x) { return exchange(model, x.position, state); },
            [&](const step::Scale& sc) { return state * sc.factor; },
        },
        s);
  }
  return state;
}

CheckReport check_infinite_statistics(const ParticleModel& model, std::size_t n_max, double tol) {
  const auto N = model.generator_count();
  double defect = 0.0;
  std::string witness;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& w : basis_words(N, n)) {
      const auto base = FockVector::basis(w);
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          const auto lhs = annihilate_free(model, i, create(model, j, base));
          const double d = (lhs - base * model.pairing(i, j)).norm();
          if (d > defect) {
            defect = d;
            witness = pair_witness(i, j, w);
          }
        }
      }
    }
  }
  CheckReport report;
  report.add(graded_check("infinite_statistics", defect, tol, witness));
  return report;
}

namespace {

FockVector commutator_on_word(const ParticleModel& model, std::size_t i, std::size_t j, const Word& w) {
  const auto base = FockVector::basis(w);
  FockVector v = annihilate_twisted(model, i, create(model, j, base));
  for (const auto& term : model.cross_terms(i, j)) {
    v.add(create(model, term.letter, annihilate_twisted(model, term.dual, base)), -term.coeff);
  }
  v.add(w, -model.pairing(i, j));
  return v;
}

}  // namespace

double commutator_defect_value(const ParticleModel& model, std::size_t i, std::size_t j, std::size_t n) {
  check_generator(model, i);
  check_generator(model, j);
  double defect = 0.0;
  for (const auto& w : basis_words(model.generator_count(), n)) {
    defect = std::max(defect, commutator_on_word(model, i, j, w).norm());
  }
  return defect;
}

CheckReport commutator_defect(const ParticleModel& model, std::size_t i, std::size_t j, std::size_t n,
                              double tol) {
  CheckReport report;
  report.add(graded_check("commutator(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ";n=" + std::to_string(n) + ")",
                          commutator_defect_value(model, i, j, n), tol));
  return report;
}

CheckReport check_commutators(const ParticleModel& model, std::size_t n_max, double tol) {
  const auto N = model.generator_count();
  double defect = 0.0;
  std::string witness;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& w : basis_words(N, n)) {
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          const double d = commutator_on_word(model, i, j, w).norm();
          if (d > defect) {
            defect = d;
            witness = pair_witness(i, j, w);
          }
        }
      }
    }
  }
  CheckReport report;
  report.add(graded_check("commutator", defect, tol, witness));
  return report;
}

CheckReport check_braid_exchange_relations(const ParticleModel& model, std::size_t n_max, double tol) {
  const auto N = model.generator_count();
  std::vector<GramMatrix> grams;
  double cc = 0.0, aa = 0.0, mixed = 0.0;
  std::string cc_w, aa_w, mixed_w;
  const auto track = [](double d, double& worst, std::string& witness, std::string label) {
    if (d > worst) {
      worst = d;
      witness = std::move(label);
    }
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& w : basis_words(N, n)) {
      const auto base = FockVector::basis(w);
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          // c+_i c+_j - sum R^{ij}_{kl} c+_k c+_l
          FockVector v = create(model, i, create(model, j, base));
          for (const auto& t : model.braid_terms(i, j)) {
            v.add(create(model, t.first, create(model, t.second, base)), -t.coeff);
          }
          if (!v.is_zero()) track(gram_residual(gram_for(model, grams, n + 2), v), cc, cc_w, pair_witness(i, j, w));

          // c-_i c-_j - sum R^{ij}_{kl} c-_k c-_l, the dual pair braided with the same R
          if (n >= 2) {
            FockVector u = annihilate_twisted(model, i, annihilate_twisted(model, j, base));
            for (const auto& t : model.braid_terms(i, j)) {
              u.add(annihilate_twisted(model, t.first, annihilate_twisted(model, t.second, base)), -t.coeff);
            }
            if (!u.is_zero()) {
              track(gram_residual(gram_for(model, grams, n - 2), u), aa, aa_w, pair_witness(i, j, w));
            }
          }

          if (i != j) {
            const auto m = commutator_on_word(model, i, j, w);
            if (!m.is_zero()) track(gram_residual(gram_for(model, grams, n), m), mixed, mixed_w, pair_witness(i, j, w));
          }
        }
      }
    }
  }
  CheckReport report;
  report.add(graded_check("exchange_creation", cc, tol, cc_w));
  report.add(graded_check("exchange_annihilation", aa, tol, aa_w));
  report.add(graded_check("exchange_mixed", mixed, tol, mixed_w));
  return report;
}

std::vector<GramMatrix> gram_matrices(const ParticleModel& model, std::size_t n_max) {
  const auto N = model.generator_count();
  for (std::size_t n = 0; n <= n_max; ++n) sector_size(N, n);

  std::vector<GramMatrix> out;
  GramMatrix g0;
  g0.generators = N;
  g0.sector = 0;
  g0.basis = {Word{}};
  g0.matrix = Eigen::MatrixXcd::Ones(1, 1);
  out.push_back(std::move(g0));

  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& prev = out.back().matrix;
    GramMatrix g;
    g.generators = N;
    g.sector = n;
    g.basis = basis_words(N, n);
    const auto dim = static_cast<Eigen::Index>(g.basis.size());
    const auto block = static_cast<Eigen::Index>(dim / static_cast<Eigen::Index>(N));
    g.matrix = Eigen::MatrixXcd::Zero(dim, dim);
    // Rows starting with letter a: G_n(a.tail, w') = sum_u (b-_a w')_u G_{n-1}(tail, u).
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto& w = g.basis[static_cast<std::size_t>(col)];
      for (std::size_t a = 0; a < N; ++a) {
        const auto reduced = twisted_on_word(model, a, w);
        for (const auto& [u, amp] : reduced.terms()) {
          const auto ucol = static_cast<Eigen::Index>(word_index(u, N));
          g.matrix.block(static_cast<Eigen::Index>(a) * block, col, block, 1) += amp * prev.col(ucol);
        }
      }
    }
    g.max_asymmetry = (g.matrix - g.matrix.adjoint()).cwiseAbs().maxCoeff();
    out.push_back(std::move(g));
  }
  return out;
}

GramMatrix gram_matrix(const ParticleModel& model, std::size_t n) {
  auto all = gram_matrices(model, n);
  return std::move(all.back());
}

double gram_residual(const GramMatrix& gram, const FockVector& v) {
  const auto dim = static_cast<Eigen::Index>(gram.basis.size());
  const auto N = gram.generators;
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim);
  for (const auto& [w, a] : v.terms()) {
    if (w.size() != gram.sector) {
      raise(ErrorKind::LengthMismatch, "word " + word_to_string(w, 1) + " is not in sector " +
                                           std::to_string(gram.sector));
    }
    x(static_cast<Eigen::Index>(word_index(w, N))) += a;
  }
  return (gram.matrix * x).norm();
}

SectorDimension sector_dimension(const GramMatrix& gram, double tol) {
  if (!gram.is_hermitian(tol)) {
    raise(ErrorKind::Hermiticity, "Gram matrix of sector " + std::to_string(gram.sector) +
                                      " is not Hermitian (max asymmetry " + std::to_string(gram.max_asymmetry) +
                                      ")");
  }
  SectorDimension d;
  d.full = gram.basis.size();
  if (gram.matrix.size() == 0) return d;
  // Singular values of a Hermitian matrix are its |eigenvalues|. The
  // divide-and-conquer SVD loses accuracy on the heavily degenerate spectra
  // of bosonic sectors, the symmetric eigensolver does not.
  const Eigen::MatrixXcd herm = (gram.matrix + gram.matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm, Eigen::EigenvaluesOnly);
  const Eigen::ArrayXd sv = eig.eigenvalues().array().abs();
  const double threshold = tol * std::max(1.0, sv.maxCoeff());
  d.quotient = static_cast<std::size_t>((sv >= threshold).count());
  return d;
}

SectorDimension sector_dimension(const ParticleModel& model, std::size_t n, double tol) {
  return sector_dimension(gram_matrix(model, n), tol);
}

PsdReport gram_psd_check(const GramMatrix& gram, double tol) {
  PsdReport out;
  const std::string name = "gram_psd(n=" + std::to_string(gram.sector) + ")";
  if (!gram.is_hermitian(tol)) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::Skipped;
    r.detail = "non-Hermitian Gram, max asymmetry " + std::to_string(gram.max_asymmetry);
    out.report.add(std::move(r));
    return out;
  }
  const Eigen::MatrixXcd herm = (gram.matrix + gram.matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm, Eigen::EigenvaluesOnly);
  const double min_ev = eig.eigenvalues().minCoeff();
  out.min_eigenvalue = min_ev;
  out.report.add(graded_check(name, std::max(0.0, -min_ev), tol));
  return out;
}

PsdReport gram_psd_check(const ParticleModel& model, std::size_t n, double tol) {
  return gram_psd_check(gram_matrix(model, n), tol);
}

}  // namespace catstat
