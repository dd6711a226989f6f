#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamspec/conditions.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

// A soundness violation or operational failure observed on one trial.
// condition_id names the condition at fault, or the pseudo-sources "oracle"
// (timeouts, size cap) and "family" (an exception-family graph that failed
// its expected properties).
struct Anomaly {
    std::string condition_id;
    std::string message;
};

struct TrialRecord {
    std::string graph_id;  // graph6 of the degree-refined relabeling
    std::string label;     // family member name, corpus line, or sample index
    int n = 0;
    long m = 0;
    int delta = 0;
    std::optional<bool> oracle;  // absent when the oracle was not consulted
    std::vector<Verdict> verdicts;
    std::vector<Anomaly> anomalies;
};

enum class OraclePolicy {
    always,    // run the oracle on every trial
    on_claim,  // run it only when some verdict claims Certified or ExceptionMember
};

struct CampaignConfig {
    std::string mode = "random";  // families | ingest | random
    int n_lo = 14;
    int n_hi = 14;
    long sample_count = 1000;          // random mode only
    std::uint64_t seed = 1;
    // Lower bound for the sampled edge count: a number, or one of the edge
    // condition ids (ore/zw/main/cor14/cor15) meaning that condition's
    // threshold at the sampled n. Empty means cor14.
    std::string edge_floor;
    std::vector<std::string> conditions;  // empty means every condition
    int parallelism = 1;  // accepted for config compatibility; execution is sequential
    OraclePolicy oracle_policy = OraclePolicy::always;
    double oracle_budget_seconds = 10.0;
};

// Flat key=value lines, '#' comments. Unknown keys and malformed values throw
// std::invalid_argument (the CLI maps that to exit code 2).
CampaignConfig parse_campaign_config(std::istream& in);

class RecordSink {
  public:
    virtual ~RecordSink() = default;
    virtual void accept(const TrialRecord& r) = 0;
};

// One JSON object per record per line, stable field order, no timing fields,
// so identical configs produce byte-identical reports.
class JsonlSink : public RecordSink {
  public:
    explicit JsonlSink(std::ostream& out) : out_(out) {}
    void accept(const TrialRecord& r) override;

  private:
    std::ostream& out_;
};

// Aggregates the per-condition outcome counts for the CSV summary.
class SummarySink : public RecordSink {
  public:
    void accept(const TrialRecord& r) override;
    // condition_id,trials,certified,exceptions,inconclusive,anomalies
    void write_csv(std::ostream& out) const;
    long records() const { return records_; }
    long anomalies() const { return anomalies_; }
    // first few anomaly messages, for terse failure reports
    const std::vector<std::string>& samples() const { return samples_; }

  private:
    struct Row {
        long trials = 0, certified = 0, exceptions = 0, inconclusive = 0, anomalies = 0;
    };
    std::map<std::string, Row> rows_;
    std::vector<std::string> order_;  // first-seen condition order
    long records_ = 0;
    long anomalies_ = 0;
    std::vector<std::string> samples_;
};

class MultiSink : public RecordSink {
  public:
    explicit MultiSink(std::vector<RecordSink*> sinks) : sinks_(std::move(sinks)) {}
    void accept(const TrialRecord& r) override {
        for (RecordSink* s : sinks_) s->accept(r);
    }

  private:
    std::vector<RecordSink*> sinks_;
};

struct RunStats {
    long records = 0;
    long anomalies = 0;
    long parse_errors = 0;
    std::vector<std::string> messages;  // parse errors and per-run warnings
};

// Evaluates the configured conditions on one graph, consults the oracle per
// policy, and cross-checks every Certified/ExceptionMember claim against it.
TrialRecord run_trial(const Graph& g, const CampaignConfig& cfg, const std::string& label);

// Audits the exception families: S/T deletion classes at depths {0,1,2,max}
// (max is sampled when the subset space is large), the named one-edge
// variants, NP1 members, and the sporadic graphs, for every n in the config
// range. Each graph is expected non-Hamilton-connected and expected to meet
// its theorem's edge bound; violations become anomalies.
RunStats run_families(const CampaignConfig& cfg, RecordSink& sink);

// Streams graph6 lines (optional standard header, '#' comments, blank lines
// skipped), filters to connected graphs with min degree 3, and runs trials.
// Malformed lines are reported in the stats and skipped.
RunStats run_ingest(std::istream& in, const CampaignConfig& cfg, RecordSink& sink);

// Samples: n uniform in [n_lo, n_hi], m uniform in [edge_floor(n), C(n,2)],
// then a uniform m-edge graph, rejected until connected with min degree 3.
// Fully determined by the seed; each item draws from its own derived stream.
RunStats run_random(const CampaignConfig& cfg, RecordSink& sink);

// One row per numeric or sign claim displayed in the source analysis: the
// edge-surplus case table, the Fourier-Budan blocks, the quotient matrices
// and their characteristic polynomials, threshold sign evaluations, family
// degree sequences and identities, and the three computed spectral values.
struct ClaimRow {
    std::string quantity;
    std::string expected;
    std::string computed;
    bool pass = false;
};

std::vector<ClaimRow> reproduce_paper_numbers();

// quantity,expected,computed,pass
void write_claims_csv(const std::vector<ClaimRow>& rows, std::ostream& out);

// Streams every labeled connected graph with min degree >= 3 on n vertices,
// one graph6 line each, in ascending bitmask order of the upper-triangle
// adjacency. Kept to 4 <= n <= 8: the n=8 corpus is already ~3.4e7 lines.
void write_exhaustive_corpus(int n, std::ostream& out);

}  // namespace hamspec
