#include "rispls/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rispls::geometry {

namespace {

void require_positive_finite(double v, const char* field) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument(std::string(field) + " must be positive and finite");
}

}

void validate(const Topology& t) {
    require_positive_finite(t.d_tr_m, "d_tr_m");
    require_positive_finite(t.d_te_m, "d_te_m");
    require_positive_finite(t.d_tl_m, "d_tl_m");
    if (!std::isfinite(t.theta_rad) || t.theta_rad < 0.0 ||
        t.theta_rad >= std::numbers::pi / 2.0)
        throw std::invalid_argument("theta_rad must lie in [0, pi/2)");
}

double distance(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

NodePositions node_positions(const Topology& t) {
    validate(t);
    NodePositions p;
    p.tx = {0.0, 0.0};
    p.ris = {t.d_tr_m, t.d_tr_m * std::tan(t.theta_rad)};
    p.rx = {t.d_tl_m, 0.0};
    p.eve = {t.d_te_m, 0.0};
    return p;
}

LinkDistances link_distances(const Topology& t) {
    const NodePositions p = node_positions(t);
    LinkDistances d;
    d.d_tx_ris = distance(p.tx, p.ris);
    d.d_ris_rx = distance(p.ris, p.rx);
    d.d_ris_eve = distance(p.ris, p.eve);
    d.d_tx_rx = distance(p.tx, p.rx);
    d.d_tx_eve = distance(p.tx, p.eve);
    return d;
}

}
