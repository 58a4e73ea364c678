#include "cryolink/mzm.hpp"

#include "cryolink/constants.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cryolink::mzm {

double bessel_j(int n, double x) {
    if (std::abs(x) > 10.0)
        throw std::domain_error("bessel_j: |x| must be <= 10");
    if (n < 0) {
        const double v = bessel_j(-n, x);
        return (-n) % 2 == 0 ? v : -v;
    }
    if (x < 0.0) {
        const double v = bessel_j(n, -x);
        return n % 2 == 0 ? v : -v;
    }
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;

    // Ascending series in long double; for x <= 10 the largest term is a few
    // hundred, leaving ample headroom below the 1e-12 absolute target.
    const long double half = static_cast<long double>(x) / 2.0L;
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= half / k;  // (x/2)^n / n!
    long double sum = term;
    for (int m = 1; m <= 80; ++m) {
        term *= -(half * half) / (static_cast<long double>(m) * (m + n));
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-20 && m > x) break;
    }
    return static_cast<double>(sum);
}

const Tone* ToneSpectrum::find(int n, int m) const {
    for (const auto& t : entries)
        if (t.n == n && t.m == m) return &t;
    return nullptr;
}

namespace {

std::string tone_label(int n, int m) {
    auto part = [](int k, const char* f) -> std::string {
        if (k == 0) return "";
        std::string s = k > 0 ? "+" : "-";
        if (std::abs(k) != 1) s += std::to_string(std::abs(k));
        return s + f;
    };
    std::string s = part(n, "f1") + part(m, "f2");
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s.empty() ? "dc" : s;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT.
void fft(std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * constants::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

ToneSpectrum two_tone_spectrum(double eps, int max_order) {
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must be in (0, 1]");
    if (max_order < 3) throw std::invalid_argument("max_order must be >= 3");

    ToneSpectrum spec;
    spec.epsilon = eps;
    spec.max_order = max_order;
    for (int n = -max_order; n <= max_order; ++n) {
        for (int m = -max_order; m <= max_order; ++m) {
            const int order = std::abs(n) + std::abs(m);
            if (order < 1 || order > max_order) continue;
            if ((n + m) % 2 == 0) continue;  // even totals cancel at quadrature
            Tone t;
            t.n = n;
            t.m = m;
            t.amplitude = bessel_j(n, eps) * bessel_j(m, eps);
            t.label = tone_label(n, m);
            spec.entries.push_back(std::move(t));
        }
    }
    return spec;
}

DistortionReport rf_powers(double eps, double responsivity, double p_opt, double z_load) {
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must be in (0, 1]");
    if (!(responsivity > 0.0) || !(p_opt > 0.0) || !(z_load > 0.0))
        throw std::invalid_argument("responsivity, p_opt and z_load must be positive");

    const double j0 = bessel_j(0, eps);
    const double j1 = bessel_j(1, eps);
    const double j2 = bessel_j(2, eps);
    const double j3 = bessel_j(3, eps);
    const double i_scale = responsivity * p_opt;

    auto rf = [&](double coeff) {
        const double i = coeff * i_scale;
        return 0.5 * i * i * z_load;
    };

    DistortionReport r;
    r.epsilon_m = eps;
    r.p_fund = rf(j1 * j0);
    r.p_im3 = rf(j2 * j1);
    r.p_im5 = rf(j3 * j2);
    r.dynamic_range_db = 10.0 * std::log10(r.p_fund / r.p_im3);
    r.popt_scale = popt_scale_for_eps(eps);
    return r;
}

double solve_epsilon_for_dr(double target_dr_db) {
    if (!(target_dr_db >= 20.0) || !(target_dr_db <= 120.0))
        throw std::domain_error("target dynamic range must be in [20, 120] dB");

    auto dr = [](double eps) {
        return 20.0 * std::log10(bessel_j(0, eps) / bessel_j(2, eps));
    };

    double lo = 1e-5;  // dr(lo) far above 120 dB
    double hi = 1.0;   // dr(1) ~ 16.5 dB, below any valid target
    for (int it = 0; it < 100 && (hi - lo) > 1e-7; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (dr(mid) >= target_dr_db)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double popt_scale_for_eps(double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must be in (0, 1]");
    return 1.0 / (eps * eps);
}

ToneSpectrum waveform_fft_oracle(double eps, double f1_hz, double f2_hz, int n_samples,
                                 double sample_rate, int max_order) {
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("eps must be in (0, 1]");
    if (f1_hz == f2_hz) throw std::invalid_argument("f1 and f2 must differ");
    if (!is_power_of_two(n_samples))
        throw std::invalid_argument("n_samples must be a power of two");
    if (!(sample_rate > 0.0)) throw std::invalid_argument("sample_rate must be positive");
    if (max_order < 3) throw std::invalid_argument("max_order must be >= 3");

    const double bin_hz = sample_rate / n_samples;
    auto to_bin = [&](double f) {
        const double b = f / bin_hz;
        if (std::abs(b - std::round(b)) > 1e-9 * std::max(1.0, std::abs(b)))
            throw std::invalid_argument("frequency must sit on an FFT bin (no windowing)");
        return static_cast<long>(std::llround(b));
    };
    const long b1 = to_bin(f1_hz);
    const long b2 = to_bin(f2_hz);
    const long max_bin = max_order * std::max(std::labs(b1), std::labs(b2));
    if (max_bin >= n_samples / 2)
        throw std::invalid_argument("sample_rate too low for the retained harmonics");

    std::vector<std::complex<double>> samples(static_cast<size_t>(n_samples));
    const double w1 = 2.0 * constants::pi * f1_hz / sample_rate;
    const double w2 = 2.0 * constants::pi * f2_hz / sample_rate;
    for (int t = 0; t < n_samples; ++t)
        samples[static_cast<size_t>(t)] = std::sin(eps * std::sin(w1 * t) + eps * std::sin(w2 * t));
    fft(samples);

    ToneSpectrum spec;
    spec.epsilon = eps;
    spec.max_order = max_order;
    for (int n = -max_order; n <= max_order; ++n) {
        for (int m = -max_order; m <= max_order; ++m) {
            const int order = std::abs(n) + std::abs(m);
            if (order < 1 || order > max_order) continue;
            if ((n + m) % 2 == 0) continue;
            const long bin = n * b1 + m * b2;
            if (bin <= 0) continue;  // positive-frequency representative only
            Tone t;
            t.n = n;
            t.m = m;
            t.amplitude = std::abs(samples[static_cast<size_t>(bin)]) / n_samples;
            t.label = tone_label(n, m);
            spec.entries.push_back(std::move(t));
        }
    }
    return spec;
}

}  // namespace cryolink::mzm
