#pragma once

#include <string>
#include <vector>

#include "kix/graph.hpp"
#include "kix/rational.hpp"

namespace kix {

// Charges 2d(v)-6 on vertices and d(f)-6 on faces, total -12 per connected
// plane graph; rules R1/R2 move charge without creating or destroying it.
// All arithmetic exact rational.
struct ChargeTransfer {
    // Element encoding: vertices are "v<i>", faces "f<i>".
    std::string from;
    std::string to;
    Rational amount;
    std::string rule;
};

struct ChargeLedger {
    std::vector<Rational> vertex_initial;
    std::vector<Rational> face_initial;
    std::vector<Rational> vertex_final;
    std::vector<Rational> face_final;
    std::vector<ChargeTransfer> transfers;

    Rational total_initial() const;
    Rational total_final() const;
};

// Initial charges; throws Disconnected (the -12 identity is per connected
// plane graph).
ChargeLedger initial_charges(const PlaneMultigraph& g);

// R1: every 2-vertex receives 1 from each incident face, counted per
// incidence. R2: every 5-face receives 1/5 from each adjacent face, counted
// per shared edge.
ChargeLedger apply_rules(const PlaneMultigraph& g, ChargeLedger ledger);

struct NegativeElement {
    std::string element;  // "v<i>" or "f<i>"
    Rational charge;
    std::string reason;
};

struct AuditReport {
    ChargeLedger ledger;
    std::vector<NegativeElement> negatives;
    bool all_nonnegative = false;  // impossible on real inputs (total is -12)
    // The configuration the finder returns, as a description string.
    std::string configuration;
};

AuditReport audit(const PlaneMultigraph& g);

// One-line summary (totals plus negative-element count) for error messages.
std::string discharge_summary(const PlaneMultigraph& g);

}  // namespace kix
