// Copyright (c) 2026 The fire-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "fire/simulation.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fire/consensus.h"
#include "fire/errors.h"
#include "fire/sha256.h"

namespace fire::sim {

namespace {

std::string join_ids(const std::set<AuthorityId>& ids)
{
    std::string out = "[";
    bool first = true;
    for (const AuthorityId& id : ids) {
        if (!first) {
            out += ";";
        }
        out += id;
        first = false;
    }
    return out + "]";
}

std::string join_ids(const std::vector<AuthorityId>& ids)
{
    return join_ids(std::set<AuthorityId>(ids.begin(), ids.end()));
}

// ---- genesis -------------------------------------------------------------

}  // namespace

ledger::ChainState genesis_state(const scenario::Scenario& sc)
{
    const scenario::Config& cfg = sc.config;
    ledger::ChainState st;
    st.emission.speed_factor = cfg.speed_factor;
    st.emission.block_interval_s = cfg.block_interval_s;
    st.emission.median_window = cfg.median_window;
    st.params.quorum_fraction = cfg.quorum_fraction;
    st.params.election_fraction = cfg.election_fraction;
    st.params.min_authority_stake = cfg.min_authority_stake;
    st.params.digest = cfg.digest;
    st.ranks = cfg.rank_table;
    st.pool.sufficiency_coefficient = cfg.sufficiency_coefficient;

    st.emission.validate();
    st.params.validate();
    st.ranks.validate();

    // Premine: minted in full at genesis, split across the tranche accounts.
    std::vector<emission::PremineAllocation> premine =
        emission::genesis_premine(cfg.premine_split, cfg.premine_coins);
    FireAmount premine_total = 0;
    for (const auto& tranche : premine) {
        premine_total = checked_add(premine_total, tranche.amount);
        governance::Account acc;
        acc.id = tranche.account;
        if (tranche.locked) {
            acc.locked = tranche.amount;
        } else {
            acc.balance = tranche.amount;
        }
        st.accounts.emplace(acc.id, std::move(acc));
    }
    emission::mint(st.emission, premine_total);

    // Fund declared accounts and seats out of their tranches. Parsing already
    // proved feasibility, but the debits below re-check by construction.
    for (const scenario::GenesisAccount& acc : cfg.accounts) {
        governance::Account& tranche = ledger::account_at(st, acc.funded_by);
        tranche.balance = checked_sub(tranche.balance, acc.balance);
        governance::Account a;
        a.id = acc.id;
        a.balance = acc.balance;
        st.accounts.emplace(a.id, std::move(a));
    }
    for (const scenario::GenesisAuthority& auth : cfg.authorities) {
        governance::Account& tranche = ledger::account_at(st, auth.funded_by);
        tranche.balance = checked_sub(tranche.balance, auth.stake);
        st.authorities.emplace(auth.id, consensus::Authority{auth.id, auth.stake, true});
    }

    st.size_history.push_back(cfg.default_block_size);
    st.height = 0;
    ledger::check_supply_invariant(st);
    return st;
}

namespace {

// ---- canonical state dump -------------------------------------------------

void digest_state(Sha256& h, const ledger::ChainState& st)
{
    std::ostringstream out;
    out << "fire-state-v1\n";
    out << "height=" << st.height << "\n";
    out << "emission=" << st.emission.msupply << "," << st.emission.minted << ","
        << st.emission.vaporized << "," << st.emission.speed_factor << ","
        << st.emission.block_interval_s << "," << st.emission.median_window << "\n";
    out << "params=" << st.params.quorum_fraction.str() << ","
        << st.params.election_fraction.str() << "," << st.params.min_authority_stake << ","
        << governance::to_string(st.params.digest) << "\n";
    out << "pool=" << st.pool.balance << ","
        << st.pool.sufficiency_coefficient.str() << "\n";
    out << "ranks=";
    for (const auto& e : st.ranks.entries) {
        out << governance::to_string(e.title) << ":" << e.level << ":" << e.min_points
            << ";";
    }
    out << "lock=" << st.ranks.citizen_lock_threshold << "\n";
    for (const auto& [id, acc] : st.accounts) {
        out << "account=" << id << "," << acc.balance << "," << acc.locked << ","
            << acc.contribution_points << "\n";
    }
    for (const auto& [id, auth] : st.authorities) {
        out << "authority=" << id << "," << auth.stake << "," << (auth.active ? 1 : 0)
            << "\n";
    }
    for (const auto& [id, c] : st.campaigns) {
        out << "campaign=" << id << "," << c.orator << "," << c.required_amount << ","
            << c.deadline_height << "," << c.direct_donations << "," << c.cpu_donations
            << "," << settlement::to_string(c.status) << ",backers=";
        for (const auto& [backer, credit] : c.per_backer) {
            out << backer << ":" << credit << ";";
        }
        out << "\n";
    }
    for (const auto& [id, b] : st.ballots) {
        out << "ballot=" << id << "," << governance::to_string(b.kind) << ","
            << governance::to_string(b.phase) << "," << b.opened_at << "," << b.reveal_at
            << "," << b.closed_at << ",candidate="
            << (b.candidate.has_value() ? *b.candidate : std::string("-"))
            << ",commits=";
        for (const auto& [voter, digest] : b.commits) {
            out << voter << ":" << digest << ";";
        }
        out << ",reveals=";
        for (const auto& [voter, vote] : b.reveals) {
            out << voter << ":" << vote.choice << ";";
        }
        out << ",invalid=" << b.invalid_reveals << "\n";
    }
    // Only the trailing window of the size history can influence anything
    // that follows; older entries are spent.
    std::size_t take = std::min(st.size_history.size(), st.emission.median_window);
    out << "sizes=" << st.size_history.size() << ":";
    for (std::size_t i = st.size_history.size() - take; i < st.size_history.size(); ++i) {
        out << st.size_history[i] << ";";
    }
    out << "\n";
    std::string text = out.str();
    h.write(text);
}

// ---- per-run logging ------------------------------------------------------

struct RunLogs {
    std::ostringstream emission;
    std::ostringstream settlements;
    std::ostringstream blocks;
    std::ostringstream ballots;
    std::ostringstream surplus_rounds;
    std::uint64_t surplus_round_counter = 0;
};

// One slot's attempt at a block. Returns true if the block finalized.
bool run_slot(ledger::ChainState& st, const scenario::Scenario& sc,
              const std::vector<const scenario::Event*>& slot_events, RunLogs& logs,
              std::map<AuthorityId, std::uint64_t>& compute_units)
{
    // No seated, active authority means no proposer: the chain is halted and
    // the slot passes without a block (events cannot apply anywhere).
    if (ledger::active_authority_ids(st).empty()) {
        return false;
    }

    // All of this slot's events are transactions riding the attempted block:
    // they apply to a candidate state that is committed only on finalization.
    ledger::ChainState candidate = st;
    std::uint64_t height = st.height + 1;

    std::vector<settlement::ComputeShare> shares;
    const scenario::EvBlockSize* size_ev = nullptr;
    const scenario::EvFault* fault = nullptr;
    const scenario::EvVotes* votes_ev = nullptr;

    // Surplus rounds triggered in this slot are buffered and logged only if
    // the carrying block makes it.
    std::vector<surplus::SurplusRoundResult> round_results;

    for (const scenario::Event* event : slot_events) {
        std::visit(
            [&](const auto& ev) {
                using T = std::decay_t<decltype(ev)>;
                if constexpr (std::is_same_v<T, scenario::EvCreateCampaign>) {
                    ledger::create_campaign(candidate, ev.id, ev.orator,
                                            ev.required_amount, ev.deadline_height);
                } else if constexpr (std::is_same_v<T, scenario::EvComputeShares>) {
                    shares.insert(shares.end(), ev.shares.begin(), ev.shares.end());
                } else if constexpr (std::is_same_v<T, scenario::EvDirectDonation>) {
                    ledger::donate(candidate, ev.from, ev.campaign, ev.amount);
                } else if constexpr (std::is_same_v<T, scenario::EvTransfer>) {
                    ledger::transfer(candidate, ev.from, ev.to, ev.amount);
                } else if constexpr (std::is_same_v<T, scenario::EvLockStake>) {
                    ledger::lock_stake(candidate, ev.account, ev.amount);
                } else if constexpr (std::is_same_v<T, scenario::EvAwardPoints>) {
                    governance::Account& acc = ledger::account_at(candidate, ev.account);
                    acc.contribution_points = checked_add(acc.contribution_points, ev.points);
                } else if constexpr (std::is_same_v<T, scenario::EvOpenBallot>) {
                    if (candidate.ballots.count(ev.ballot) != 0) {
                        throw StateError("ballot '" + ev.ballot + "' already exists");
                    }
                    governance::Ballot b;
                    b.id = ev.ballot;
                    b.kind = ev.kind;
                    b.candidate = ev.candidate;
                    b.opened_at = height;
                    candidate.ballots.emplace(b.id, std::move(b));
                } else if constexpr (std::is_same_v<T, scenario::EvStartReveal>) {
                    governance::start_reveal(ledger::ballot_at(candidate, ev.ballot), height);
                } else if constexpr (std::is_same_v<T, scenario::EvCloseBallot>) {
                    governance::Ballot& b = ledger::ballot_at(candidate, ev.ballot);
                    governance::close_ballot(b, height);
                    governance::TallyResult tally = governance::tally_ballot(b);
                    if (tally.kind == governance::BallotKind::Election) {
                        if (governance::election_passed(tally,
                                                        candidate.params.election_fraction)) {
                            consensus::admit_authority(candidate, *b.candidate);
                        }
                    } else {
                        // Redistribution round: candidates are the open,
                        // underfunded campaigns; the tally only orders them.
                        std::vector<surplus::RankedCampaign> candidates;
                        for (const auto& [cid, c] : candidate.campaigns) {
                            if (c.status != settlement::CampaignStatus::Open) {
                                continue;
                            }
                            FireAmount gap = c.remaining_capacity();
                            if (gap == 0) {
                                continue;
                            }
                            std::uint64_t votes = 0;
                            if (auto it = tally.campaign_votes.find(cid);
                                it != tally.campaign_votes.end()) {
                                votes = it->second;
                            }
                            candidates.push_back({cid, votes, gap});
                        }
                        surplus::SurplusRoundResult round =
                            surplus::run_surplus_round(candidate.pool, std::move(candidates));
                        for (const surplus::RoundPayout& p : round.payouts) {
                            settlement::Campaign& c = ledger::campaign_at(candidate, p.id);
                            c.direct_donations = checked_add(c.direct_donations, p.amount);
                        }
                        round_results.push_back(std::move(round));
                    }
                } else if constexpr (std::is_same_v<T, scenario::EvCommit>) {
                    governance::commit_vote(ledger::ballot_at(candidate, ev.ballot),
                                            ledger::account_at(candidate, ev.voter),
                                            candidate.ranks, ev.digest_hex);
                } else if constexpr (std::is_same_v<T, scenario::EvReveal>) {
                    governance::reveal_vote(ledger::ballot_at(candidate, ev.ballot), ev.voter,
                                            ev.choice, ev.nonce, candidate.params.digest);
                } else if constexpr (std::is_same_v<T, scenario::EvBlockSize>) {
                    size_ev = &ev;
                } else if constexpr (std::is_same_v<T, scenario::EvFault>) {
                    fault = &ev;
                } else if constexpr (std::is_same_v<T, scenario::EvVotes>) {
                    votes_ev = &ev;
                }
            },
            event->payload);
    }

    // Build the block against the candidate (transactions first, then the
    // mint is computed over the post-transaction capacities).
    std::vector<AuthorityId> active = ledger::active_authority_ids(candidate);
    if (active.empty()) {
        // Events cannot have removed seats, but an election could in theory
        // coincide with a halted chain; be explicit rather than crash.
        return false;
    }

    consensus::Block block;
    block.height = height;
    block.proposer = consensus::proposer_for_height(active, height);
    block.size_bytes = size_ev != nullptr ? size_ev->size : sc.config.default_block_size;
    block.shares = std::move(shares);

    std::uint64_t median =
        emission::rolling_median(candidate.size_history, candidate.emission.median_window);
    if (fault != nullptr && fault->mode == scenario::FaultMode::Oversize) {
        block.size_bytes = 2 * median + 1;
    }
    if (fault != nullptr && fault->mode == scenario::FaultMode::BadProposer) {
        block.proposer = active[std::size_t((height + 1) % active.size())];
    }

    // The honest mint for this block; zero when the block is oversize anyway
    // (such a block never mints, whatever it claims).
    FireAmount honest_mint = 0;
    std::map<CampaignId, FireAmount> honest_allocation;
    if (block.size_bytes <= 2 * median) {
        FireAmount base = emission::base_reward(candidate.emission);
        FireAmount allowed = emission::penalized_reward(base, block.size_bytes, median);
        std::map<CampaignId, FireAmount> caps;
        for (const auto& [cid, c] : candidate.campaigns) {
            if (c.status == settlement::CampaignStatus::Open) {
                caps.emplace(cid, c.remaining_capacity());
            }
        }
        settlement::AccrualResult accrual =
            settlement::accrue_block_funds(block.shares, allowed, caps);
        honest_mint = accrual.total_credited;
        for (const auto& [cid, credit] : accrual.credits) {
            honest_allocation.emplace(cid, credit.amount);
        }
    }
    block.declared_mint = honest_mint;
    block.declared_allocation = honest_allocation;

    if (fault != nullptr && fault->mode == scenario::FaultMode::BadMint) {
        std::int64_t delta = fault->mint_delta;
        if (delta >= 0) {
            block.declared_mint = checked_add(honest_mint, FireAmount(delta));
        } else {
            FireAmount drop = FireAmount(-delta);
            block.declared_mint = drop >= honest_mint ? 0 : honest_mint - drop;
        }
    }
    if (fault != nullptr && fault->mode == scenario::FaultMode::BadAllocation) {
        std::map<CampaignId, FireAmount> bad = honest_allocation;
        if (!bad.empty()) {
            bad.begin()->second += 1;
        } else {
            bad.emplace("no-such-campaign", 1);
        }
        block.declared_allocation = std::move(bad);
    }

    if (votes_ev != nullptr) {
        block.votes = std::set<AuthorityId>(votes_ev->voters.begin(), votes_ev->voters.end());
    } else {
        block.votes = std::set<AuthorityId>(active.begin(), active.end());
    }

    consensus::FinalizeOutcome outcome = consensus::finalize_block(candidate, block);

    if (outcome.finalized) {
        st = std::move(candidate);

        logs.emission << height << "," << outcome.minted << "," << st.emission.minted << ","
                      << st.emission.vaporized << "," << st.emission.circulating() << "\n";
        for (const consensus::SettlementRecord& rec : outcome.settlements) {
            logs.settlements << rec.height << "," << rec.campaign << ","
                             << settlement::to_string(rec.outcome.branch) << ","
                             << rec.outcome.campaign_payout << ","
                             << rec.outcome.backer_payout_total << ","
                             << rec.outcome.surplus_allocation << ","
                             << rec.outcome.circulation_reduction << "\n";
        }
        for (const surplus::SurplusRoundResult& round : round_results) {
            logs.surplus_round_counter += 1;
            logs.surplus_rounds << logs.surplus_round_counter << "," << round.pool_before
                                << "," << round.selected << ",";
            logs.surplus_rounds << "[";
            for (std::size_t i = 0; i < round.payouts.size(); ++i) {
                if (i > 0) {
                    logs.surplus_rounds << ";";
                }
                logs.surplus_rounds << round.payouts[i].id << ":" << round.payouts[i].amount;
            }
            logs.surplus_rounds << "]," << round.pool_after << "\n";
        }

        // Informational compute split across the seats that finalized this
        // block; units only, no tokens move here.
        std::uint64_t total_units = 0;
        for (const settlement::ComputeShare& s : block.shares) {
            total_units = checked_add(total_units, s.units);
        }
        if (total_units > 0) {
            for (const auto& [id, units] : consensus::split_compute(total_units, active, height)) {
                compute_units[id] = checked_add(compute_units[id], units);
            }
        }
    } else {
        // The candidate dies with everything it carried; slashes are the one
        // effect that outlives the rejection, re-applied to the real state.
        for (const AuthorityId& id : outcome.slashed) {
            auto it = st.authorities.find(id);
            if (it != st.authorities.end() && it->second.active) {
                consensus::slash_authority(st, id);
            }
        }
    }

    logs.blocks << height << "," << block.proposer << "," << block.size_bytes << ","
                << block.declared_mint << "," << join_ids(block.votes) << ","
                << (outcome.finalized ? "true" : "false") << "," << join_ids(outcome.slashed)
                << "\n";

    ledger::check_supply_invariant(st);
    return outcome.finalized;
}

void write_ballot_log(const ledger::ChainState& st, RunLogs& logs)
{
    for (const auto& [id, b] : st.ballots) {
        logs.ballots << id << "," << governance::to_string(b.kind) << ","
                     << governance::to_string(b.phase) << "," << b.opened_at << ","
                     << b.reveal_at << "," << b.closed_at << "," << b.commits.size() << ","
                     << b.reveals.size() << ",";
        if (b.phase == governance::BallotPhase::Closed) {
            governance::TallyResult tally = governance::tally_ballot(b);
            if (b.kind == governance::BallotKind::Election) {
                bool admitted = governance::election_passed(tally, st.params.election_fraction);
                logs.ballots << "yes=" << tally.yes << ";no=" << tally.no
                             << ";committed=" << tally.committed
                             << ";admitted=" << (admitted ? "true" : "false");
            } else {
                bool first = true;
                for (const auto& [cid, votes] : tally.campaign_votes) {
                    if (!first) {
                        logs.ballots << ";";
                    }
                    logs.ballots << cid << "=" << votes;
                    first = false;
                }
            }
        }
        logs.ballots << "\n";
    }
}

}  // namespace

std::string state_digest(const ledger::ChainState& st)
{
    Sha256 h;
    digest_state(h, st);
    auto digest = h.finalize();
    return to_hex(digest.data(), digest.size());
}

RunReport run_scenario(const scenario::Scenario& sc)
{
    ledger::ChainState st = genesis_state(sc);

    RunLogs logs;
    logs.emission << "height,reward_atomic,minted_atomic,vaporized_atomic,circulating_atomic\n";
    logs.settlements << "height,campaign,branch,campaign_payout,backer_payout_total,"
                        "surplus_allocation,circulation_reduction\n";
    logs.blocks << "height,proposer,size,mint,votes,finalized,slashed\n";
    logs.ballots << "ballot,kind,phase,opened,reveal,closed,commits,reveals,result\n";
    logs.surplus_rounds << "round,pool_before,selected,payouts,pool_after\n";

    RunReport report;

    // Group events by slot; they are already sorted by height.
    std::size_t next_event = 0;
    for (std::uint64_t slot = 1; slot <= sc.horizon; ++slot) {
        std::vector<const scenario::Event*> slot_events;
        while (next_event < sc.events.size() && sc.events[next_event].height == slot) {
            slot_events.push_back(&sc.events[next_event]);
            ++next_event;
        }
        run_slot(st, sc, slot_events, logs, report.compute_units);
    }

    write_ballot_log(st, logs);

    std::ostringstream summary;
    summary << "final_height=" << st.height << "\n";
    summary << "minted_atomic=" << st.emission.minted << "\n";
    summary << "vaporized_atomic=" << st.emission.vaporized << "\n";
    summary << "circulating_atomic=" << st.emission.circulating() << "\n";
    summary << "total_supply_display=" << to_display_coins(st.emission.msupply) << "\n";

    report.emission_csv = logs.emission.str();
    report.settlements_csv = logs.settlements.str();
    report.blocks_csv = logs.blocks.str();
    report.ballots_csv = logs.ballots.str();
    report.surplus_rounds_csv = logs.surplus_rounds.str();
    report.summary = summary.str();
    report.digest = state_digest(st);
    report.final_state = std::move(st);
    return report;
}

void emit_reports(const RunReport& report, const std::filesystem::path& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw ScenarioError("cannot create output directory '" + out_dir.string() +
                            "': " + ec.message());
    }
    auto write_file = [&](const char* name, const std::string& content) {
        std::filesystem::path p = out_dir / name;
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ScenarioError("cannot write '" + p.string() + "'");
        }
        out << content;
        if (!out) {
            throw ScenarioError("short write on '" + p.string() + "'");
        }
    };
    write_file("emission.csv", report.emission_csv);
    write_file("settlements.csv", report.settlements_csv);
    write_file("blocks.csv", report.blocks_csv);
    write_file("ballots.csv", report.ballots_csv);
    write_file("surplus_rounds.csv", report.surplus_rounds_csv);
    write_file("summary.txt", report.summary);
}

RunReport replay_verify(const scenario::Scenario& sc, const RunReport& original)
{
    RunReport fresh = run_scenario(sc);
    if (fresh.blocks_csv != original.blocks_csv) {
        throw InvariantError("replay diverged: block logs differ");
    }
    if (fresh.digest != original.digest) {
        throw InvariantError("replay diverged: state digests differ");
    }
    return fresh;
}

}  // namespace fire::sim
