#include "rispls/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace rispls::metrics {

double snr(std::complex<double> h_eff, double p_tx_w, double noise_w) {
    return p_tx_w * std::norm(h_eff) / noise_w;
}

double sinr(std::complex<double> h_sig, double p_sig_w,
            std::complex<double> h_jam, double p_jam_w, double noise_w) {
    return p_sig_w * std::norm(h_sig) / (p_jam_w * std::norm(h_jam) + noise_w);
}

double secrecy_rate(double gamma_rx, double gamma_eve) {
    return std::max(0.0, std::log2(1.0 + gamma_rx) - std::log2(1.0 + gamma_eve));
}

int outage_indicator(double c_s, double r_th) { return c_s < r_th ? 1 : 0; }

SecrecySample make_secrecy_sample(double gamma_rx, double gamma_eve) {
    return {gamma_rx, gamma_eve, secrecy_rate(gamma_rx, gamma_eve)};
}

}
