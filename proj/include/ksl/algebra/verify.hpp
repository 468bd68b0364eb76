#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ksl/algebra/surd.hpp"

namespace ksl::algebra {

struct Instantiation {
  std::string point;
  bool agreed = true;
};

struct StepReport {
  std::string name;
  std::string description;
  bool passed = true;
  std::vector<std::string> residuals;  // one entry per failed comparison
  std::vector<std::string> notes;      // cleared factors, side conditions
  std::vector<Instantiation> instantiations;
};

struct PassReport {
  std::string name;
  std::vector<StepReport> steps;

  bool passed() const;
  std::size_t instantiation_count() const;
  const StepReport* step(const std::string& name) const;
};

PassReport verify_lemma22(int idx);
PassReport verify_lemma23();
PassReport verify_remark_b1();
PassReport verify_lemma24();
PassReport verify_section2_chain();
PassReport verify_lemma31();
PassReport verify_section3_chain();
PassReport verify_cross_chain();

/// Samples psi(e) = alpha e - sqrt(alpha^2 e^2 - beta e + gamma) on
/// (0, e_max) and checks strict increase. Throws DomainError unless all
/// three are positive and beta^2 > 4 alpha^2 gamma.
PassReport verify_psi_monotone(double alpha, double beta, double gamma);

/// Every symbolic pass, in a fixed order.
std::vector<PassReport> verify_all();

/// Moves s into Q(vars)[sqrt(radicand)] using sqrt(s.radicand) =
/// factor * sqrt(radicand); throws unless s.radicand == factor^2 radicand.
Surd rebase(const Surd& s, const RationalFunction& radicand,
            const RationalFunction& factor);

/// f(value) for a rational function f in v.
Surd surd_eval(const RationalFunction& f, Var v, const Surd& value);

}  // namespace ksl::algebra
