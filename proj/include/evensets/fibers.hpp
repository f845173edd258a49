#ifndef EVENSETS_FIBERS_HPP
#define EVENSETS_FIBERS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evensets/lattice.hpp"
#include "evensets/rational_form.hpp"

namespace evensets {

// ════════════════════════════════════════════════════════════════════
// Abstract fiber configurations
//
// A fiber is a weighted configuration of components: self-intersections,
// multiplicities, arithmetic genus bookkeeping, pairwise intersection
// totals, and point labels locating intersection mass. Contracting a
// (-1)-component concentrates the new intersections at one fresh labeled
// point; labels that sat on the contracted component merge into it (the
// label tower), which is what later tells a tangency from two distinct
// points. Absent labels are left absent: classification then returns
// every candidate instead of guessing.
// ════════════════════════════════════════════════════════════════════

/// Singular point on a component: total local multiplicity and, when
/// known, the contact orders of the branches through it ([1,1] node,
/// [2] cusp for double points).
struct SingularPoint {
    int label = -1;
    long long multiplicity = 2;
    std::optional<std::vector<long long>> branches;
};

struct FiberComponent {
    std::string id;
    long long self_int = 0;
    long long mult = 1;
    long long pa = 0;
    std::vector<SingularPoint> sing;
};

struct PairData {
    long long total = 0;
    std::map<int, long long> at; // label -> units located there; rest unlabeled
};

class FiberConfig {
public:
    std::size_t add_component(const std::string& id, long long self_int, long long mult,
                              long long pa = 0);
    std::size_t size() const { return comps_.size(); }
    const FiberComponent& component(std::size_t i) const { return comps_[i]; }
    FiberComponent& component(std::size_t i) { return comps_[i]; }
    std::size_t index_of(const std::string& id) const; // throws BadInput if absent
    bool has_component(const std::string& id) const;

    void set_pair(const std::string& a, const std::string& b, long long total);
    void add_pair_label(const std::string& a, const std::string& b, const std::string& label,
                        long long count = 1);

    /// Declared singular point (node [1,1], cusp [2], or unknown branches).
    void declare_singular(const std::string& comp, const std::string& kind);

    long long meet(std::size_t i, std::size_t j) const; // self_int when i == j
    const PairData* pair_data(std::size_t i, std::size_t j) const;

    int ensure_label(const std::string& name);
    int fresh_label();
    void union_labels(int a, int b);
    int label_rep(int l) const;
    const std::string& label_name(int l) const { return label_names_[l]; }
    std::size_t label_count() const { return label_names_.size(); }

    /// Remove component i, dropping its pair entries.
    void erase_component(std::size_t i);

    void set_pair_by_index(std::size_t i, std::size_t j, long long total);
    void add_pair_label_by_index(std::size_t i, std::size_t j, int label, long long count);

private:
    std::vector<FiberComponent> comps_;
    std::map<std::string, std::size_t> by_id_;
    std::map<std::pair<std::size_t, std::size_t>, PairData> pairs_;
    std::vector<std::string> label_names_;
    std::vector<int> label_parent_;

    static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j);
};

struct ValidationReport {
    bool valid = false;
    std::string reason;
    std::vector<std::string> warnings;
    bool fully_labeled = false;
};

/// Zariski-style fiber test: multiplicities positive, F.comp = 0 for every
/// component (hence F.F = 0), Gram matrix negative semidefinite with
/// one-dimensional kernel, intersection labels within totals, singular-point
/// data within the declared arithmetic genus.
ValidationReport validate_fiber(const FiberConfig& cfg);

/// validate_fiber or throw NotAFiber(reason).
void require_valid_fiber(const FiberConfig& cfg);

struct ContractionStep {
    std::string comp_id;
    std::string label;
};

/// Contract a (-1)-component of genus 0. For all remaining D, D':
///   D.D' += (D.theta)(D'.theta) at one fresh label,
///   D.D  += (D.theta)^2,  pa(D) += binom(D.theta, 2),
/// recording branch data when the upstairs distribution is known, and
/// merging every label that lay on theta into the fresh one.
/// Throws NotContractible, NotAFiber.
FiberConfig contract(const FiberConfig& cfg, const std::string& comp_id,
                     ContractionStep* step = nullptr);

/// Contract (-1)-components of genus 0, earliest declared first, until none
/// remain. Multiplicities of surviving components never change.
std::pair<FiberConfig, std::vector<ContractionStep>> minimalize(const FiberConfig& cfg);

struct KodairaType {
    enum class Kind { Smooth, I, II, III, IV, Dtilde4, Etilde6, NumericClass, Unrecognized };
    Kind kind = Kind::Unrecognized;
    long long r = 0; // cycle length for I
    long long m = 1; // multiplicity
    std::string desc;

    bool operator==(const KodairaType& o) const {
        return kind == o.kind && r == o.r && m == o.m;
    }
};

std::string to_string(const KodairaType& t);

struct FiberClass {
    std::vector<KodairaType> candidates; // one entry = definite
    FiberConfig minimal;
    std::vector<ContractionStep> history;
    std::string note;

    bool definite() const { return candidates.size() == 1; }
    const KodairaType& type() const { return candidates.front(); }
};

/// Minimalize, divide out the gcd of multiplicities as m, then match the
/// template shapes. Ambiguities from missing point labels come back as a
/// candidate list, never a guess.
FiberClass classify_fiber(const FiberConfig& cfg);

/// Topological Euler number: Smooth 0, I_r r, II 2, III 3, IV 4,
/// Dtilde4 6, Etilde6 8. UnrecognizedType otherwise.
long long euler_char(const KodairaType& t);

struct BudgetResult {
    long long sum = 0;
    long long total = 0;
    long long residual = 0;
    bool exact = false;
};

/// Sum of Euler numbers against a c2 budget (12 downstairs, 24 upstairs).
/// Throws BudgetExceeded when the sum overshoots.
BudgetResult c2_budget(const std::vector<KodairaType>& types, long long total);

struct Pullback {
    KodairaType type;
    int factor = 2; // divisor multiplicity acquired under the double cover
};

/// Branch-fiber pullback: I(r,m) -> 2 I(2r,m), II -> 2 III, III -> 2 Dtilde4,
/// IV -> 2 Etilde6. NotInTable otherwise.
Pullback pullback_type(const KodairaType& t);

/// Canonical bundle degree along the base, 2 g(B) + sum (m_i - 1)/m_i,
/// exact rational; requires chi = 2.
Rat canonical_degree(long long g_base, long long chi, const std::vector<long long>& mults);

/// Genus of the base double cover from the ramification degree:
/// deg R even -> deg R / 2 - 1; OddDegree otherwise.
long long hurwitz_genus(long long deg_r);

/// n' <= deg R <= n' + 1.
bool ramification_degree_ok(long long n_prime, long long deg_r);

// ── template builders ────────────────────────────────────────────────

enum class Contact { Unlabeled, Nodal, Tangent };

/// theta (-1, mult 2m) against C (-4, mult m) meeting twice; the contact
/// annotation decides nodal / cuspidal / unspecified.
FiberConfig double_component_template(int m, Contact contact);

/// r curves C_i (-4, mult m) and r curves theta_i (-1, mult 2m) in a cycle;
/// contracting every theta leaves an r-cycle of (-2)s (a double point for
/// r = 1, which the builder labels as two distinct points).
FiberConfig cycle_template(int r, int m);

/// 4 theta_1 + 2 theta_2 + C_1 + C_2; two contractions end in two (-2)s
/// meeting twice at one label tower.
FiberConfig iii_template();

/// 4(t_1+t_2+t_3) + 3 C_1 + C_2 + C_3 + C_4; four contractions end in
/// three (-2)s through one common point.
FiberConfig iv_template();

FiberConfig dtilde4_template(int m = 1);
FiberConfig etilde6_template(int m = 1);

} // namespace evensets

#endif
