#include "eit/cooling.hpp"

#include <Eigen/LU>
#include <cmath>
#include <complex>
#include <limits>

#include "eit/discrim.hpp"
#include "eit/errors.hpp"

namespace eit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Vector9c vec_complex(const Matrix3c& m) {
    Vector9c v;
    for (int col = 0; col < 3; ++col)
        for (int r = 0; r < 3; ++r) v[3 * col + r] = m(r, col);
    return v;
}

Matrix3c unvec_complex(const Vector9c& v) {
    Matrix3c m;
    for (int col = 0; col < 3; ++col)
        for (int r = 0; r < 3; ++r) m(r, col) = v[3 * col + r];
    return m;
}

}  // namespace

std::vector<std::string> check_cooling_params(const CoolingParams& p) {
    std::vector<std::string> bad = check_config(p.cfg);
    if (!(p.nu > 0.0)) bad.push_back("nu must be positive");
    if (p.eta1 < 0.0) bad.push_back("eta1 negative");
    if (p.eta2 < 0.0) bad.push_back("eta2 negative");
    if (p.alpha1 < 0.0 || p.alpha1 > 1.0) bad.push_back("alpha1 outside [0, 1]");
    if (p.alpha2 < 0.0 || p.alpha2 > 1.0) bad.push_back("alpha2 outside [0, 1]");
    return bad;
}

std::vector<std::string> cooling_warnings(const CoolingParams& p) {
    std::vector<std::string> w;
    if (p.eta1 > 0.3) w.push_back("eta1 above the Lamb-Dicke range");
    if (p.eta2 > 0.3) w.push_back("eta2 above the Lamb-Dicke range");
    return w;
}

Eigen::Matrix3d sideband_operator(const ValidatedConfig& cfg, double eta1,
                                  double eta2) {
    const auto& d = cfg.drive();
    Eigen::Matrix3d V = Eigen::Matrix3d::Zero();
    V(2, 0) = eta1 * d.omega_1 / 2.0;
    V(0, 2) = -V(2, 0);
    V(2, 1) = eta2 * d.omega_2 / 2.0;
    V(1, 2) = -V(2, 1);
    return V;
}

SidebandFlux sideband_flux(const Matrix9c& L_complex, const Eigen::Matrix3d& V,
                           const DensityMatrix3& rho, double nu_signed) {
    const std::complex<double> i1(0.0, 1.0);
    Matrix9c A = L_complex;
    A.diagonal().array() += i1 * nu_signed;

    const Matrix3c Vc = V.cast<std::complex<double>>();
    const Vector9c b = vec_complex(Vc * rho.matrix());

    Eigen::PartialPivLU<Matrix9c> lu(A);
    Vector9c x = lu.solve(b);
    x += lu.solve(b - A * x);
    const double residual = (A * x - b).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-8 * std::max(1.0, b.cwiseAbs().maxCoeff())))
        throw NumericError("resolvent solve residual too large");

    const std::complex<double> tr = (2.0 * Vc * unvec_complex(x)).trace();
    return SidebandFlux{tr.real(), tr.imag()};
}

CoolingRates cooling_rates(const CoolingParams& p) {
    std::vector<std::string> bad = check_cooling_params(p);
    if (!bad.empty()) throw ConfigError(bad);
    const ValidatedConfig cfg = validate_config(p.cfg);

    const Liouvillian L = build_liouvillian(cfg);
    const DensityMatrix3 rho = steady_state(L);
    const double rho33 = excited_population(rho);

    const Eigen::Matrix3d V = sideband_operator(cfg, p.eta1, p.eta2);
    const double floor = (cfg.atom().gamma_1 * p.alpha1 * p.eta1 * p.eta1 +
                          cfg.atom().gamma_2 * p.alpha2 * p.eta2 * p.eta2) *
                         rho33;

    CoolingRates out;
    if (p.eta1 == 0.0 && p.eta2 == 0.0) {
        out.q = kNaN;
        out.n_bar = kNaN;
        return out;
    }

    const Matrix9c Lc = build_liouvillian_complex(cfg);
    // The heating coefficient pairs with the -i nu resolvent in this
    // vectorization: that is the sign for which a red sideband placed on
    // the two-photon peak cools (q < 1) at blue single-photon detunings.
    const SidebandFlux fp = sideband_flux(Lc, V, rho, -p.nu);
    const SidebandFlux fm = sideband_flux(Lc, V, rho, +p.nu);

    out.a_plus = floor + fp.real;
    out.a_minus = floor + fm.real;
    out.im_residue = std::max(std::abs(fp.imag), std::abs(fm.imag));
    out.q = out.a_minus != 0.0 ? out.a_plus / out.a_minus : kInf;
    out.cooling = out.q >= 0.0 && out.q < 1.0;
    out.n_bar = out.cooling ? out.q / (1.0 - out.q) : kInf;
    return out;
}

PhononDistribution steady_state_thermal(const CoolingRates& rates, int n_max) {
    const double q = rates.q;
    if (!(q >= 0.0 && q < 1.0))
        throw PreconditionError("thermal state requires 0 <= q < 1");
    if (n_max < 0) throw PreconditionError("n_max negative");

    PhononDistribution out;
    out.p.resize(static_cast<std::size_t>(n_max) + 1);
    double w = 1.0 - q;
    double total = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        out.p[n] = w;
        total += w;
        w *= q;
    }
    out.truncation_error = 1.0 - total;  // = q^(n_max+1)
    double mean = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        out.p[n] /= total;
        mean += n * out.p[n];
    }
    out.mean = mean;
    return out;
}

SpectralScan scan_cooling(const CoolingParams& tmpl, const GridAxis& axis1,
                          const GridAxis& axis2, ExecutionPolicy policy) {
    axis1.validate();
    axis2.validate();
    const bool a1_is_delta = axis1.name == "delta_2";
    const bool a1_is_omega = axis1.name == "omega_2";
    const bool a2_is_delta = axis2.name == "delta_2";
    const bool a2_is_omega = axis2.name == "omega_2";
    if (!((a1_is_delta && a2_is_omega) || (a1_is_omega && a2_is_delta)))
        throw ConfigError("scan axes must be delta_2 and omega_2");
    {
        std::vector<std::string> bad = check_cooling_params(tmpl);
        if (!bad.empty()) throw ConfigError(bad);
    }

    SpectralScan scan;
    scan.quantity = "inv_q";
    scan.axis1 = axis1;
    scan.axis2 = axis2;
    scan.values.assign(scan.size(), kNaN);
    scan.valid.assign(scan.size(), false);
    scan.metadata = {
        {"scenario", "sideband-cooling"},
        {"nu", format_double(tmpl.nu)},
        {"omega_1", format_double(tmpl.cfg.drive.omega_1)},
        {"eta1", format_double(tmpl.eta1)},
        {"eta2", format_double(tmpl.eta2)},
        {"gamma_12",
         format_double(validate_config(tmpl.cfg).coherence().gamma_12)},
        {"tracking", "red-sideband-on-peak"},
    };

    const auto v1 = axis1.values();
    const auto v2 = axis2.values();
    for_each_index(scan.size(), policy, [&](std::size_t k) {
        const int i = static_cast<int>(k) / axis2.n;
        const int j = static_cast<int>(k) % axis2.n;
        const double delta2 = a1_is_delta ? v1[i] : v2[j];
        const double omega2 = a1_is_delta ? v2[j] : v1[i];
        try {
            CoolingParams p = tmpl;
            p.cfg.drive.omega_2 = omega2;
            p.cfg.drive.delta_2 = delta2;
            p.cfg.drive.delta_1 = delta2;  // placeholder for tracking
            const double peak =
                bright_peak_delta(validate_config(p.cfg), PeakAnchor::HoldDelta2);
            p.cfg.drive.delta_1 = delta2 + peak - p.nu;
            const CoolingRates rates = cooling_rates(p);
            if (std::isfinite(rates.q) && rates.q > 0.0) {
                scan.values[k] = 1.0 / rates.q;
                scan.valid[k] = true;
            }
        } catch (const Error&) {
            // recorded as missing
        }
    });
    return scan;
}

}  // namespace eit
