#pragma once

#include <complex>

namespace rispls::metrics {

struct SecrecySample {
    double gamma_rx = 0.0;   // linear SNR at the legitimate Rx
    double gamma_eve = 0.0;  // linear SNR at the eavesdropper
    double c_s = 0.0;        // clamped secrecy rate, bits/s/Hz
};

double snr(std::complex<double> h_eff, double p_tx_w, double noise_w);

// Jamming variant: p_sig|h_sig|^2 / (p_jam|h_jam|^2 + noise).
double sinr(std::complex<double> h_sig, double p_sig_w,
            std::complex<double> h_jam, double p_jam_w, double noise_w);

// max(0, log2(1+gamma_rx) - log2(1+gamma_eve)).
double secrecy_rate(double gamma_rx, double gamma_eve);

// 1 if c_s < r_th, else 0 (strict inequality defines outage).
int outage_indicator(double c_s, double r_th);

SecrecySample make_secrecy_sample(double gamma_rx, double gamma_eve);

}
