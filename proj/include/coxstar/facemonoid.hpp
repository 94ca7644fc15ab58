#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxstar/demazure.hpp"

namespace coxstar {

/// The full map (J1, J2) -> J1 *_I J2 for one diagram, as a dense matrix
/// over subset masks, plus per-entry verification flags.
struct StarTable {
    std::string type_name;
    int rank = 0;
    std::vector<std::uint32_t> entries;  // (j1 << rank) | j2 -> j3 mask
    std::vector<std::uint8_t> status;    // per entry, bits below

    static constexpr std::uint8_t kClosure = 1;
    static constexpr std::uint8_t kCommutative = 2;
    static constexpr std::uint8_t kContainment = 4;
    static constexpr std::uint8_t kClosedForm = 8;

    std::uint32_t entry(std::uint32_t j1, std::uint32_t j2) const {
        return entries[(static_cast<std::size_t>(j1) << rank) | j2];
    }
    bool all_ok(std::uint8_t bit) const;
};

/// If z = w_0^J for some J, returns that J (which equals both the descent
/// set and the support of z); otherwise throws NotALongestElement.
NodeSet recognize_w0J(const Element& z);

/// J1 *_I J2, computed as recognize_w0J(down(w0J_w0I(J1), longest(J2))).
NodeSet star_sets(const Group& g, NodeSet j1, NodeSet j2);

/// Same value along the inductive route: split off connected components,
/// handle unit/zero rows, then reduce endpoint-complement pairs directly
/// and recurse into the two parabolic subgroups, swapping sides in between.
/// Throws InternalMismatch if an intermediate containment fails.
NodeSet star_sets_inductive(const Group& g, NodeSet j1, NodeSet j2);

/// The closed-form table value: type A interval formula, type B three-case
/// formula, type D case analysis with the parity entries, itemized E6/E7/E8
/// lists, the all-empty rule for F/H/I2, unit and zero rows, and, for
/// disconnected arguments, the union over all pairs of connected components.
/// Reducible diagrams compose componentwise. Total on valid inputs.
NodeSet closed_form(const CoxeterDiagram& d, NodeSet j1, NodeSet j2);

/// Default rank bound for table generation: COXSTAR_RANK_BOUND or 9.
int default_rank_bound();

/// Which verification checks to run.
enum class CheckSet { all, theorem, lemmas, closedform, inductive };

struct VerifyFailure {
    std::string check;
    std::uint32_t j1 = 0, j2 = 0;
    std::string detail;
};

struct VerificationReport {
    std::string type_name;
    int rank = 0;
    long pairs = 0;
    long assoc_triples = 0;
    bool assoc_exhaustive = false;
    bool internal_mismatch = false;
    std::vector<VerifyFailure> failures;
    StarTable table;

    bool ok() const { return failures.empty() && !internal_mismatch; }
};

/// Runs the selected checks over every subset pair: closure, commutativity,
/// containment, star/down agreement, closed-form match, inductive match,
/// and associativity of the finished table. Failures are data, not
/// exceptions. rank_bound < 0 means default_rank_bound().
VerificationReport verify(const Group& g, CheckSet checks = CheckSet::all, int rank_bound = -1);

/// Entries for all ordered subset pairs, with status flags filled by the
/// verify checks. rank_bound < 0 means default_rank_bound().
StarTable full_table(const Group& g, int rank_bound = -1);

}  // namespace coxstar
