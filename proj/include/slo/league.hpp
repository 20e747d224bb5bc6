#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace slo {

enum class Tier { Wealthiest = 0, Regular = 1, Weakest = 2 };

const char* tier_name(Tier t);

/// One candidate solution: a value per post (dimension) plus the cached
/// internal score. The optional fields are season bookkeeping: engaged by
/// training, consumed by the transfer phase, cleared at the season boundary.
struct Team {
    std::vector<double> values;
    double score = 0.0;
    Tier tier = Tier::Weakest;

    std::optional<int> trained_post;
    std::optional<double> pre_train_score; // score before this season's training
    std::optional<double> pre_train_value; // trained post's value before training
    std::optional<double> delta;           // post-training score minus pre_train_score
};

/// Run parameters. The training scale anneals geometrically from alpha to
/// alpha_end across the seasons (alpha_end == alpha gives a constant scale);
/// both are fractions of the per-dimension domain width.
struct SloConfig {
    int n_a = 30;
    int n_b = 30;
    int n_c = 30;
    int seasons = 100;
    double alpha = 0.1;
    double alpha_end = 0.001;
    std::uint64_t seed = 0;
};

/// The whole population: three fixed-size tiers plus best-of-history.
/// tier_best_score tracks the running best post-training score per tier
/// (initial classification included); global_best_score equals their max.
struct League {
    std::vector<Team> wealthiest;
    std::vector<Team> regular;
    std::vector<Team> weakest;
    std::vector<double> global_best_point;
    double global_best_score = 0.0;
    std::array<double, 3> tier_best_score{};
    int season_index = 0; // completed seasons; 0 before the first

    std::vector<Team>& tier(Tier t);
    const std::vector<Team>& tier(Tier t) const;
};

struct TeamRef {
    Tier tier;
    int index;
};

enum class TransferKind {
    RegularToWealthy, // wealthy recipient absorbs a regular donor's value
    WeakestToRegular, // regular recipient absorbs a weakest donor's value
    Discovery,        // a weakest post replaced by a fresh uniform value
};

const char* transfer_kind_name(TransferKind k);

/// Audit trail of one season's transfer phase. For donor-carrying kinds the
/// value equals the donor's value at the logged post at pairing time;
/// Discovery values are fresh uniform draws within that post's bounds.
struct TransferEntry {
    int season;
    TransferKind kind;
    std::optional<TeamRef> donor;
    TeamRef recipient;
    int post;
    double value;
};

struct TransferLog {
    std::vector<TransferEntry> entries;
};

} // namespace slo
