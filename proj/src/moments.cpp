#include "thermcat/moments.hpp"

#include <cmath>

namespace thermcat {

namespace {

double check_real(Complex value, const char* what) {
  if (std::abs(value.imag()) > 1e-9 * std::abs(value.real()) + 1e-12)
    throw ImaginaryResidualError(what);
  return value.real();
}

Complex pair_integral(const WignerGaussianTerm& s, const WignerGaussianTerm& t) {
  return std::exp(s.log_coeff + t.log_coeff +
                  gaussian_log_integral(-(s.quad + t.quad), s.lin + t.lin,
                                        s.lin_bar + t.lin_bar));
}

}  // namespace

double purity(const StateSum& state) {
  const CompiledState cs = compile(state);
  const double scale = std::pow(kPi, state.num_modes);
  Complex total = 0.0;
  if (cs.with_qubit) {
    // Tr(|i><j| |k><l|) = delta_jk delta_il pairs block (i,j) with (j,i).
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (const auto& s : cs.qubit_blocks[2 * i + j])
          for (const auto& t : cs.qubit_blocks[2 * j + i])
            total += pair_integral(s, t);
  } else {
    for (const auto& s : cs.terms)
      for (const auto& t : cs.terms) total += pair_integral(s, t);
  }
  return scale * check_real(total, "purity has a non-real residual");
}

double mean_photon(const StateSum& state, int mode) {
  if (mode < 0 || mode >= state.num_modes)
    throw BadParameterError("mean_photon: bad mode index");
  const CompiledState cs = compile(state);
  const std::vector<WignerGaussianTerm>* terms = &cs.terms;
  std::vector<WignerGaussianTerm> diag;
  if (cs.with_qubit) {
    diag = cs.qubit_blocks[0];
    diag.insert(diag.end(), cs.qubit_blocks[3].begin(), cs.qubit_blocks[3].end());
    terms = &diag;
  }

  // In the anchor frame: <|beta + c|^2> = <beta betabar> + 2 Re(cbar <beta>)
  // + |c|^2; moments come from derivatives of the closed-form integral.
  const Complex c0 = state.anchor(mode);
  Complex total = 0.0, first = 0.0, first_bar = 0.0, second = 0.0;
  for (const auto& t : *terms) {
    const CMat Pinv = CMat(-t.quad).inverse();
    const Complex I = std::exp(log_integral(t));
    const Complex g = (Pinv * t.lin_bar)(mode);            // <beta_m>/I
    const Complex h = (Pinv.transpose() * t.lin)(mode);    // <betabar_m>/I
    total += I;
    first += I * g;
    first_bar += I * h;
    second += I * (Pinv(mode, mode) + g * h);
  }
  const Complex value = second + std::conj(c0) * first + c0 * first_bar +
                        std::norm(c0) * total - 0.5 * total;
  return check_real(value, "mean_photon has a non-real residual");
}

double wigner_integral(const StateSum& state) {
  const CompiledState cs = compile(state);
  Complex total = 0.0;
  if (cs.with_qubit) {
    // Qubit kernels integrate to Tr|i><j| = delta_ij.
    for (const auto& t : cs.qubit_blocks[0]) total += std::exp(log_integral(t));
    for (const auto& t : cs.qubit_blocks[3]) total += std::exp(log_integral(t));
  } else {
    for (const auto& t : cs.terms) total += std::exp(log_integral(t));
  }
  return check_real(total, "wigner integral has a non-real residual");
}

}  // namespace thermcat
