#pragma once

#include "slo/league.hpp"
#include "slo/objectives.hpp"
#include "slo/result.hpp"
#include "slo/rng.hpp"

namespace slo {

/// Rejects non-positive tier sizes or season counts and training scales
/// outside (0, 1].
void validate_config(const SloConfig& config);

/// Training scale for a 1-based season: geometric interpolation from
/// config.alpha (season 1) to config.alpha_end (season N).
double effective_alpha(const SloConfig& config, int season);

/// Draws n_a + n_b + n_c teams uniformly inside the bounds (team by team,
/// dimension by dimension), scores them, and classifies by score: the top
/// n_a become the wealthiest tier, then n_b regular, then n_c weakest.
/// Ties keep generation order. Tier membership is fixed for the whole run.
League initialize_league(const SloConfig& config, const ObjectiveSpec& objective, Rng& rng);

/// Picks the post to train this season, uniform over [0, dimension_count).
/// Recorded on the team and returned.
int select_post(Team& team, int dimension_count, Rng& rng);

/// Perturbs the selected post by u ~ Uniform(-alpha*width, +alpha*width)
/// and clamps to the post's bounds. Remembers the pre-training score and
/// value so the transfer phase can classify and revert.
void train(Team& team, int post, const ObjectiveSpec& objective, double alpha, Rng& rng);

/// Re-scores every trained team and sets delta = new score - pre-training
/// score. The trained value is kept unconditionally here, even when it
/// worsened; correction happens in the transfer phase. Throws
/// std::runtime_error naming the team and point on a non-finite value.
void evaluate_and_delta(League& league, const ObjectiveSpec& objective);

/// Best-of-history update; strictly better scores replace, ties keep the
/// incumbent.
void update_global_best(League& league);

/// End-of-season transfer market. Teams with delta > 0 improved, the rest
/// did not (delta == 0 counts as not improved):
///   1. improved regular teams, best score first, are sold to non-improved
///      wealthy teams, worst score first, pairing while the donor outscores
///      the recipient; the recipient's trained post takes the donor's value
///      at that same post,
///   2. improved weakest teams are sold to non-improved regular teams the
///      same way; each consumed weakest donor gets a freshly discovered
///      value at the sold post,
///   3. non-improved wealthy/regular teams left without a purchase revert
///      this season's training (value and score restored),
///   4. every non-improved weakest team replaces its trained value with a
///      freshly discovered one,
///   5. every team whose vector changed is re-scored so the next season's
///      baseline is current. Tier membership never changes.
/// Random draws: one uniform per discovery, in steps 2 then 4, recipients
/// in pairing order / teams in index order.
TransferLog transfer_phase(League& league, const ObjectiveSpec& objective, Rng& rng);

/// One season: select_post + train for every team (wealthiest tier first,
/// then regular, then weakest, in index order), evaluate_and_delta,
/// tier/global best bookkeeping, transfer_phase. Returns the season's
/// trace row, captured after evaluation and before transfers.
SeasonRecord play_season(League& league, const ObjectiveSpec& objective, const SloConfig& config,
                         Rng& rng);

/// Full run: initialize, then config.seasons seasons. When snapshot_before /
/// snapshot_after are given they receive copies of the league right after
/// initialization and after the last season.
RunResult run_slo(const SloConfig& config, const ObjectiveSpec& objective,
                  League* snapshot_before = nullptr, League* snapshot_after = nullptr);

} // namespace slo
