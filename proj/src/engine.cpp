#include "slo/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slo {

const char* tier_name(Tier t) {
    switch (t) {
    case Tier::Wealthiest: return "wealthiest";
    case Tier::Regular: return "regular";
    case Tier::Weakest: return "weakest";
    }
    return "?";
}

const char* transfer_kind_name(TransferKind k) {
    switch (k) {
    case TransferKind::RegularToWealthy: return "regular_to_wealthy";
    case TransferKind::WeakestToRegular: return "weakest_to_regular";
    case TransferKind::Discovery: return "discovery";
    }
    return "?";
}

std::vector<Team>& League::tier(Tier t) {
    switch (t) {
    case Tier::Wealthiest: return wealthiest;
    case Tier::Regular: return regular;
    default: return weakest;
    }
}

const std::vector<Team>& League::tier(Tier t) const {
    return const_cast<League*>(this)->tier(t);
}

void validate_config(const SloConfig& config) {
    if (config.n_a < 1 || config.n_b < 1 || config.n_c < 1)
        throw std::invalid_argument("tier sizes n_a, n_b, n_c must all be >= 1");
    if (config.seasons < 1)
        throw std::invalid_argument("seasons must be >= 1");
    if (!(config.alpha > 0.0 && config.alpha <= 1.0))
        throw std::invalid_argument("alpha must be in (0, 1]");
    if (!(config.alpha_end > 0.0 && config.alpha_end <= 1.0))
        throw std::invalid_argument("alpha_end must be in (0, 1]");
}

double effective_alpha(const SloConfig& config, int season) {
    if (config.seasons <= 1 || config.alpha == config.alpha_end)
        return config.alpha;
    const double t = static_cast<double>(season - 1) / static_cast<double>(config.seasons - 1);
    return config.alpha * std::pow(config.alpha_end / config.alpha, t);
}

League initialize_league(const SloConfig& config, const ObjectiveSpec& objective, Rng& rng) {
    validate_config(config);
    validate_objective(objective);

    const int total = config.n_a + config.n_b + config.n_c;
    std::vector<Team> teams(total);
    for (auto& team : teams) {
        team.values.resize(objective.dimension);
        for (int d = 0; d < objective.dimension; ++d)
            team.values[d] = rng.uniform(objective.bounds[d].first, objective.bounds[d].second);
    }
    for (auto& team : teams)
        team.score = objective.score(team.values);

    // primitive evaluation: classify once, by score; ties keep draw order
    std::stable_sort(teams.begin(), teams.end(),
                     [](const Team& a, const Team& b) { return a.score > b.score; });

    League league;
    league.wealthiest.assign(teams.begin(), teams.begin() + config.n_a);
    league.regular.assign(teams.begin() + config.n_a, teams.begin() + config.n_a + config.n_b);
    league.weakest.assign(teams.begin() + config.n_a + config.n_b, teams.end());
    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        double best = -std::numeric_limits<double>::infinity();
        for (auto& team : league.tier(t)) {
            team.tier = t;
            best = std::max(best, team.score);
        }
        league.tier_best_score[static_cast<int>(t)] = best;
    }
    league.global_best_point = league.wealthiest.front().values;
    league.global_best_score = league.wealthiest.front().score;
    league.season_index = 0;
    return league;
}

int select_post(Team& team, int dimension_count, Rng& rng) {
    if (dimension_count < 1)
        throw std::invalid_argument("select_post: dimension_count must be >= 1");
    const int post = rng.uniform_int(0, dimension_count - 1);
    team.trained_post = post;
    return post;
}

void train(Team& team, int post, const ObjectiveSpec& objective, double alpha, Rng& rng) {
    const auto [lo, hi] = objective.bounds[post];
    team.trained_post = post;
    team.pre_train_score = team.score;
    team.pre_train_value = team.values[post];
    const double width = hi - lo;
    const double u = rng.uniform(-alpha * width, alpha * width);
    team.values[post] = std::clamp(team.values[post] + u, lo, hi);
}

namespace {

[[noreturn]] void throw_non_finite(const ObjectiveSpec& objective, const Team& team, int index) {
    std::ostringstream msg;
    msg << "objective '" << objective.name << "' returned a non-finite value for team "
        << tier_name(team.tier) << '[' << index << "] at point (";
    for (std::size_t d = 0; d < team.values.size(); ++d)
        msg << (d ? ", " : "") << team.values[d];
    msg << ')';
    throw std::runtime_error(msg.str());
}

void require_bookkeeping(const League& league, bool need_delta, const char* op) {
    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest})
        for (const auto& team : league.tier(t))
            if (!team.trained_post || !team.pre_train_score || !team.pre_train_value ||
                (need_delta && !team.delta))
                throw std::logic_error(std::string(op) + ": team not trained this season");
}

} // namespace

void evaluate_and_delta(League& league, const ObjectiveSpec& objective) {
    require_bookkeeping(league, false, "evaluate_and_delta");
    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        auto& teams = league.tier(t);
        for (int i = 0; i < static_cast<int>(teams.size()); ++i) {
            Team& team = teams[i];
            const double s = objective.score(team.values);
            if (!std::isfinite(s))
                throw_non_finite(objective, team, i);
            team.delta = s - *team.pre_train_score;
            team.score = s;
        }
    }
}

void update_global_best(League& league) {
    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        for (const auto& team : league.tier(t)) {
            if (team.score > league.global_best_score) {
                league.global_best_score = team.score;
                league.global_best_point = team.values;
            }
        }
    }
}

namespace {

// Non-improved teams, worst score first (ties: worst delta, then index).
std::vector<int> recipient_order(const std::vector<Team>& teams) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(teams.size()); ++i)
        if (*teams[i].delta <= 0.0)
            idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (teams[a].score != teams[b].score)
            return teams[a].score < teams[b].score;
        return *teams[a].delta < *teams[b].delta;
    });
    return idx;
}

// Improved teams, best score first (ties: best delta, then index).
std::vector<int> donor_order(const std::vector<Team>& teams) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(teams.size()); ++i)
        if (*teams[i].delta > 0.0)
            idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (teams[a].score != teams[b].score)
            return teams[a].score > teams[b].score;
        return *teams[a].delta > *teams[b].delta;
    });
    return idx;
}

void revert_training(Team& team) {
    team.values[*team.trained_post] = *team.pre_train_value;
    team.score = *team.pre_train_score; // exact restore, no re-evaluation needed
}

} // namespace

TransferLog transfer_phase(League& league, const ObjectiveSpec& objective, Rng& rng) {
    require_bookkeeping(league, true, "transfer_phase");
    const int season = league.season_index + 1;

    TransferLog log;
    std::array<std::vector<char>, 3> mutated{
        std::vector<char>(league.wealthiest.size(), 0),
        std::vector<char>(league.regular.size(), 0),
        std::vector<char>(league.weakest.size(), 0),
    };

    // recipients buy from better-scoring donors at the recipient's trained
    // post; unpaired recipients revert the season's training instead
    auto market = [&](Tier recipient_tier, Tier donor_tier, TransferKind kind,
                      bool refill_donor_post) {
        auto& recipients = league.tier(recipient_tier);
        auto& donors = league.tier(donor_tier);
        const std::vector<int> r_idx = recipient_order(recipients);
        const std::vector<int> d_idx = donor_order(donors);

        const std::size_t pairs = std::min(r_idx.size(), d_idx.size());
        std::size_t p = 0;
        while (p < pairs && donors[d_idx[p]].score > recipients[r_idx[p]].score) {
            Team& recipient = recipients[r_idx[p]];
            Team& donor = donors[d_idx[p]];
            const int post = *recipient.trained_post;
            const double value = donor.values[post];
            recipient.values[post] = value;
            mutated[static_cast<int>(recipient_tier)][r_idx[p]] = 1;
            log.entries.push_back({season, kind, TeamRef{donor_tier, d_idx[p]},
                                   TeamRef{recipient_tier, r_idx[p]}, post, value});
            if (refill_donor_post) {
                // the sold slot goes to a discovered young player
                const auto [lo, hi] = objective.bounds[post];
                const double fresh = rng.uniform(lo, hi);
                donor.values[post] = fresh;
                mutated[static_cast<int>(donor_tier)][d_idx[p]] = 1;
                log.entries.push_back(
                    {season, TransferKind::Discovery, std::nullopt, TeamRef{donor_tier, d_idx[p]},
                     post, fresh});
            }
            ++p;
        }
        for (std::size_t j = p; j < r_idx.size(); ++j)
            revert_training(recipients[r_idx[j]]);
    };

    market(Tier::Wealthiest, Tier::Regular, TransferKind::RegularToWealthy, false);
    market(Tier::Regular, Tier::Weakest, TransferKind::WeakestToRegular, true);

    // non-improved weakest teams always swap the trained player for a
    // discovered one
    for (int i = 0; i < static_cast<int>(league.weakest.size()); ++i) {
        Team& team = league.weakest[i];
        if (*team.delta > 0.0)
            continue;
        const int post = *team.trained_post;
        const auto [lo, hi] = objective.bounds[post];
        const double fresh = rng.uniform(lo, hi);
        team.values[post] = fresh;
        mutated[2][i] = 1;
        log.entries.push_back(
            {season, TransferKind::Discovery, std::nullopt, TeamRef{Tier::Weakest, i}, post, fresh});
    }

    // re-score mutated teams so next season's delta baseline is current
    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        auto& teams = league.tier(t);
        for (int i = 0; i < static_cast<int>(teams.size()); ++i) {
            if (!mutated[static_cast<int>(t)][i])
                continue;
            const double s = objective.score(teams[i].values);
            if (!std::isfinite(s))
                throw_non_finite(objective, teams[i], i);
            teams[i].score = s;
        }
    }
    return log;
}

SeasonRecord play_season(League& league, const ObjectiveSpec& objective, const SloConfig& config,
                         Rng& rng) {
    const int season = league.season_index + 1;
    const double alpha = effective_alpha(config, season);

    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        for (auto& team : league.tier(t)) {
            const int post = select_post(team, objective.dimension, rng);
            train(team, post, objective, alpha, rng);
        }
    }
    evaluate_and_delta(league, objective);

    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        double& best = league.tier_best_score[static_cast<int>(t)];
        for (const auto& team : league.tier(t))
            best = std::max(best, team.score);
    }
    update_global_best(league);

    SeasonRecord record;
    record.season = season;
    record.best_wealthy = league.tier_best_score[0];
    record.best_regular = league.tier_best_score[1];
    record.best_weakest = league.tier_best_score[2];
    record.global_best = league.global_best_score;

    transfer_phase(league, objective, rng);

    for (Tier t : {Tier::Wealthiest, Tier::Regular, Tier::Weakest}) {
        for (auto& team : league.tier(t)) {
            team.trained_post.reset();
            team.pre_train_score.reset();
            team.pre_train_value.reset();
            team.delta.reset();
        }
    }
    league.season_index = season;
    return record;
}

RunResult run_slo(const SloConfig& config, const ObjectiveSpec& objective, League* snapshot_before,
                  League* snapshot_after) {
    validate_config(config);
    validate_objective(objective);

    long long evaluations = 0;
    ObjectiveSpec counted = objective;
    counted.eval = [&evaluations, base = objective.eval](std::span<const double> x) {
        ++evaluations;
        return base(x);
    };

    Rng rng(config.seed);
    League league = initialize_league(config, counted, rng);
    if (snapshot_before)
        *snapshot_before = league;

    RunResult result;
    result.trace.reserve(config.seasons);
    for (int s = 0; s < config.seasons; ++s)
        result.trace.push_back(play_season(league, counted, config, rng));

    result.best_point = league.global_best_point;
    result.best_score = league.global_best_score;
    result.best_raw = objective.to_raw(league.global_best_score);
    result.evaluations_used = evaluations;
    if (snapshot_after)
        *snapshot_after = league;
    return result;
}

} // namespace slo
