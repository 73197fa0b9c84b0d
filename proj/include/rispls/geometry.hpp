#pragma once

namespace rispls::geometry {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Planar four-terminal layout: Tx at the origin, Rx and eavesdropper on the
// horizontal axis, RIS lifted off the axis at elevation angle theta. d_tr_m
// is the RIS horizontal offset, so the true Tx-RIS distance is d_tr/cos(theta).
struct Topology {
    double d_tr_m = 20.0;    // RIS horizontal offset from the Tx
    double d_te_m = 30.0;    // Tx - eavesdropper distance
    double d_tl_m = 40.0;    // Tx - Rx distance
    double theta_rad = 0.0;  // RIS elevation angle, in [0, pi/2)
};

struct NodePositions {
    Point2 tx;
    Point2 ris;
    Point2 rx;
    Point2 eve;
};

struct LinkDistances {
    double d_tx_ris = 0.0;
    double d_ris_rx = 0.0;
    double d_ris_eve = 0.0;
    double d_tx_rx = 0.0;
    double d_tx_eve = 0.0;
};

// Throws std::invalid_argument naming the offending field.
void validate(const Topology& t);

double distance(const Point2& a, const Point2& b);

// tx=(0,0), ris=(d_tr, d_tr*tan(theta)), eve=(d_te, 0), rx=(d_tl, 0).
NodePositions node_positions(const Topology& t);

// Pairwise Euclidean distances between the node positions.
LinkDistances link_distances(const Topology& t);

}
