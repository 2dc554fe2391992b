#include "kix/discharge.hpp"

#include <sstream>

#include "kix/reduce.hpp"

namespace kix {

Rational ChargeLedger::total_initial() const {
    Rational t;
    for (const Rational& r : vertex_initial) t += r;
    for (const Rational& r : face_initial) t += r;
    return t;
}

Rational ChargeLedger::total_final() const {
    Rational t;
    for (const Rational& r : vertex_final) t += r;
    for (const Rational& r : face_final) t += r;
    return t;
}

ChargeLedger initial_charges(const PlaneMultigraph& g) {
    if (!g.connected()) throw Error(ErrorCode::Disconnected, "charge identity is per component");
    ChargeLedger ledger;
    for (int v = 0; v < g.vertex_count(); ++v)
        ledger.vertex_initial.emplace_back(2 * g.degree(v) - 6);
    for (const FaceWalk& f : g.faces()) ledger.face_initial.emplace_back(f.length() - 6);
    ledger.vertex_final = ledger.vertex_initial;
    ledger.face_final = ledger.face_initial;
    return ledger;
}

ChargeLedger apply_rules(const PlaneMultigraph& g, ChargeLedger ledger) {
    // R1: per face incidence of a 2-vertex (a walk visiting it twice pays twice).
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
        for (int v : g.faces()[f].vertices()) {
            if (g.degree(v) != 2) continue;
            ledger.face_final[f] -= 1;
            ledger.vertex_final[v] += 1;
            ledger.transfers.push_back(
                {"f" + std::to_string(f), "v" + std::to_string(v), Rational(1), "R1"});
        }
    }
    // R2: per shared edge between a face and a 5-face.
    for (int e = 0; e < g.edge_count(); ++e) {
        int f1 = g.face_of(Dart{e, 0});
        int f2 = g.face_of(Dart{e, 1});
        if (f1 == f2) continue;
        for (auto [giver, taker] : {std::pair{f1, f2}, std::pair{f2, f1}}) {
            if (g.faces()[taker].length() != 5) continue;
            Rational amount(1, 5);
            ledger.face_final[giver] -= amount;
            ledger.face_final[taker] += amount;
            ledger.transfers.push_back(
                {"f" + std::to_string(giver), "f" + std::to_string(taker), amount, "R2"});
        }
    }
    return ledger;
}

namespace {

std::string negative_reason(const PlaneMultigraph& g, bool is_face, int index) {
    if (!is_face) {
        int d = g.degree(index);
        if (d <= 1) return "vertex of degree " + std::to_string(d) + " (min-degree hypothesis fails)";
        return "2-vertex underfed by its faces (a short face holds it)";
    }
    int len = g.faces()[index].length();
    if (len <= 2) return "face of length " + std::to_string(len) + " (parallel edges)";
    if (len == 3) return "triangular face";
    if (len == 4) return "4-face";
    if (len == 5) return "5-face missing 1/5 payments (a neighbor of length <= 6)";
    if (len == 6) return "6-face drained below zero (2-vertices or 5-face neighbors)";
    return "long face overloaded with 2-vertices or 5-face neighbors";
}

}  // namespace

AuditReport audit(const PlaneMultigraph& g) {
    AuditReport report;
    report.ledger = apply_rules(g, initial_charges(g));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (report.ledger.vertex_final[v] < Rational(0))
            report.negatives.push_back(
                {"v" + std::to_string(v), report.ledger.vertex_final[v],
                 negative_reason(g, false, v)});
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
        if (report.ledger.face_final[f] < Rational(0))
            report.negatives.push_back(
                {"f" + std::to_string(f), report.ledger.face_final[f],
                 negative_reason(g, true, f)});
    report.all_nonnegative = report.negatives.empty();
    if (auto cfg = try_find_configuration(g)) report.configuration = cfg->describe();
    return report;
}

std::string discharge_summary(const PlaneMultigraph& g) {
    std::ostringstream os;
    try {
        ChargeLedger ledger = apply_rules(g, initial_charges(g));
        int negatives = 0;
        for (const Rational& r : ledger.vertex_final) negatives += r < Rational(0);
        for (const Rational& r : ledger.face_final) negatives += r < Rational(0);
        os << "total initial " << ledger.total_initial().str() << ", total final "
           << ledger.total_final().str() << ", negative elements " << negatives;
    } catch (const Error& e) {
        os << "(no ledger: " << e.what() << ")";
    }
    return os.str();
}

}  // namespace kix
