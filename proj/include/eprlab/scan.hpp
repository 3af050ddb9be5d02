#pragma once

// Exhaustive scans over symmetric 0-1 matrices with a cheap-to-expensive
// predicate pipeline. Scans are resumable from a saved cursor and
// embarrassingly parallel: disjoint contiguous ranges of the mask space
// are processed independently and their reports merged by an associative
// fold. Given the same range, the final report is a pure function of the
// inputs, so a resumed or sharded run reproduces the uninterrupted one
// (except for wall-clock fields).

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "eprlab/enumerate.hpp"
#include "eprlab/equimodular.hpp"
#include "eprlab/epr.hpp"
#include "eprlab/graph.hpp"
#include "eprlab/kernel.hpp"
#include "eprlab/rules.hpp"
#include "eprlab/version.hpp"

namespace eprlab {

enum class ScanMode { Conjecture, Properties };

inline const char* scan_mode_name(ScanMode m) {
    return m == ScanMode::Conjecture ? "conjecture" : "properties";
}

struct PropertySet {
    bool forbidden = false;
    bool dichotomy = false;
    bool epr2_forms = false;
    bool battery = false;
    bool odd_girth = false;

    static PropertySet all() { return {true, true, true, true, true}; }
    bool any() const { return forbidden || dichotomy || epr2_forms || battery || odd_girth; }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (forbidden) out.push_back("forbidden");
        if (dichotomy) out.push_back("dichotomy");
        if (epr2_forms) out.push_back("epr2");
        if (battery) out.push_back("battery");
        if (odd_girth) out.push_back("oddgirth");
        return out;
    }

    static PropertySet parse(const std::string& csv) {
        PropertySet out;
        std::size_t pos = 0;
        while (pos <= csv.size()) {
            std::size_t comma = csv.find(',', pos);
            if (comma == std::string::npos) comma = csv.size();
            const std::string name = csv.substr(pos, comma - pos);
            if (name == "forbidden")
                out.forbidden = true;
            else if (name == "dichotomy")
                out.dichotomy = true;
            else if (name == "epr2")
                out.epr2_forms = true;
            else if (name == "battery")
                out.battery = true;
            else if (name == "oddgirth")
                out.odd_girth = true;
            else if (!name.empty())
                throw PreconditionError("unknown property: " + name);
            pos = comma + 1;
        }
        return out;
    }

    friend bool operator==(const PropertySet&, const PropertySet&) = default;
};

struct Counterexample {
    BigInt mask;
    std::string detail;

    friend bool operator==(const Counterexample& a, const Counterexample& b) {
        return a.mask == b.mask && a.detail == b.detail;
    }
};

struct ScanReport {
    std::string version = std::string(kVersion);
    int n = 0;
    ScanMode mode = ScanMode::Conjecture;
    PropertySet properties;     // meaningful in Properties mode
    BigInt range_lo = 0;
    BigInt range_hi = 0;
    std::uint64_t total_examined = 0;
    std::map<std::string, std::uint64_t> counts;
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0.0;
    std::optional<BigInt> resumed_from;
};

/// Equality of everything a scan determines; wall-clock and resume
/// provenance are ignored. This is the determinism contract.
inline bool same_results(const ScanReport& a, const ScanReport& b) {
    return a.n == b.n && a.mode == b.mode && a.properties == b.properties &&
           a.range_lo == b.range_lo && a.range_hi == b.range_hi &&
           a.total_examined == b.total_examined && a.counts == b.counts &&
           a.counterexamples == b.counterexamples;
}

/// Associative merge of reports over adjacent ranges (a.range_hi must equal
/// b.range_lo). Counts add, counterexamples concatenate in mask order.
inline ScanReport merge(ScanReport a, const ScanReport& b) {
    if (a.n != b.n || a.mode != b.mode || !(a.properties == b.properties))
        throw PreconditionError("merge: reports come from different scans");
    if (a.range_hi != b.range_lo)
        throw PreconditionError("merge: ranges are not adjacent");
    a.range_hi = b.range_hi;
    a.total_examined += b.total_examined;
    for (const auto& [key, value] : b.counts) a.counts[key] += value;
    a.counterexamples.insert(a.counterexamples.end(), b.counterexamples.begin(),
                             b.counterexamples.end());
    a.elapsed_seconds += b.elapsed_seconds;
    a.resumed_from.reset();
    return a;
}

namespace detail {

inline PropertySet effective_properties(int n, PropertySet p) {
    if (n < 5) p.dichotomy = false;
    if (n < 3) p.epr2_forms = false;
    if (n < 2) p.battery = false;
    return p;
}

inline std::map<std::string, std::uint64_t> initial_counts(ScanMode mode,
                                                           const PropertySet& p) {
    std::map<std::string, std::uint64_t> c;
    c["nonsingular"] = 0;
    if (mode == ScanMode::Conjecture) {
        c["ends_naa"] = 0;
        c["tail_nsnaa"] = 0;
        c["tail_ssnaa"] = 0;
        c["equimodular"] = 0;
        c["equimodular_constant_diagonal"] = 0;
        return c;
    }
    if (p.forbidden) {
        c["forbidden_checked"] = 0;
        c["forbidden_violations"] = 0;
    }
    if (p.dichotomy) {
        c["naa_enders"] = 0;
        c["tail_nsnaa"] = 0;
        c["tail_ssnaa"] = 0;
        c["dichotomy_violations"] = 0;
    }
    if (p.epr2_forms) {
        c["epr2_checked"] = 0;
        c["epr2_violations"] = 0;
    }
    if (p.battery) {
        c["battery_checked"] = 0;
        c["battery_violations"] = 0;
    }
    if (p.odd_girth) {
        c["odd_girth_checked"] = 0;
        c["odd_girth_violations"] = 0;
    }
    return c;
}

inline IntMatrix to_int_matrix(const FlatMatrix& flat) {
    IntMatrix m(flat.n);
    for (int i = 0; i < flat.n; ++i)
        for (int j = 0; j < flat.n; ++j) m.at(i + 1, j + 1) = flat.get(i, j);
    return m;
}

} // namespace detail

/// Incremental scan over one contiguous mask range. `step` processes a
/// bounded number of masks so callers can checkpoint between steps.
class Scanner {
public:
    Scanner(int n, ScanMode mode, PropertySet properties, BigInt lo, BigInt hi)
        : n_(n), mode_(mode), props_(detail::effective_properties(n, properties)),
          cursor_(lo) {
        check_enumeration_order(n);
        if (mode == ScanMode::Conjecture && n < 3)
            throw PreconditionError("conjecture scan requires n >= 3");
        report_.n = n;
        report_.mode = mode;
        report_.properties = mode == ScanMode::Properties ? props_ : PropertySet{};
        report_.range_lo = lo;
        report_.range_hi = hi;
        report_.counts = detail::initial_counts(mode, props_);
    }

    /// Restores state captured by a checkpoint.
    void restore(ScanReport partial, BigInt cursor) {
        report_ = std::move(partial);
        cursor_ = std::move(cursor);
    }

    bool done() const { return cursor_ >= report_.range_hi; }
    const BigInt& cursor() const { return cursor_; }
    const ScanReport& report() const { return report_; }
    ScanReport& report() { return report_; }

    /// Processes up to `budget` masks; returns true when the range is done.
    bool step(std::uint64_t budget) {
        BigInt stop = cursor_ + budget;
        if (stop > report_.range_hi) stop = report_.range_hi;
        for_each_in_range(n_, cursor_, stop,
                          [this](const BigInt& mask, const FlatMatrix& flat) {
                              process(mask, flat);
                          });
        cursor_ = stop;
        return done();
    }

private:
    void process(const BigInt& mask, const FlatMatrix& flat) {
        ++report_.total_examined;
        if (mode_ == ScanMode::Conjecture)
            process_conjecture(mask, flat);
        else
            process_properties(mask, flat);
    }

    void process_conjecture(const BigInt& mask, const FlatMatrix& flat) {
        auto& counts = report_.counts;
        const std::int64_t d = det_flat(flat);
        if (d == 0) return; // both predicates false: nothing to record
        ++counts["nonsingular"];

        const bool ends_naa = ends_naa_flat(flat, d);
        const EquimodFlat eq = equimodular_flat(flat, d);
        if (eq.equimodular) {
            ++counts["equimodular"];
            if (eq.constant_diagonal) ++counts["equimodular_constant_diagonal"];
        }
        if (ends_naa) {
            ++counts["ends_naa"];
            if (n_ >= 5) {
                const char l4 = letter_at_flat(flat, n_ - 4);
                const char l3 = letter_at_flat(flat, n_ - 3);
                if (l4 == 'N' && l3 == 'S')
                    ++counts["tail_nsnaa"];
                else if (l4 == 'S' && l3 == 'S')
                    ++counts["tail_ssnaa"];
            }
        }
        const bool inverse_equim_cd = eq.equimodular && eq.constant_diagonal;
        if (ends_naa != inverse_equim_cd) {
            report_.counterexamples.push_back(
                {mask, std::string("ends_naa=") + (ends_naa ? "true" : "false") +
                           " but inverse equimodular with constant diagonal=" +
                           (inverse_equim_cd ? "true" : "false")});
        }
    }

    void process_properties(const BigInt& mask, const FlatMatrix& flat) {
        auto& counts = report_.counts;
        const std::int64_t d = det_flat(flat);
        const bool nonsingular = d != 0;
        if (nonsingular) ++counts["nonsingular"];

        bool naa = false;
        if ((props_.dichotomy || props_.epr2_forms) && nonsingular && n_ >= 3)
            naa = ends_naa_flat(flat, d);

        if (props_.forbidden) {
            EprSequence seq;
            seq.field = FieldTag::Rationals;
            for (int j = 1; j <= n_; ++j) seq.letters.push_back(letter_at_flat(flat, j));
            ++counts["forbidden_checked"];
            const auto violations = validate_forbidden(seq);
            counts["forbidden_violations"] += violations.size();
            for (const auto& v : violations)
                report_.counterexamples.push_back(
                    {mask, "forbidden: " + v.rule + " in " + seq.letters + ": " + v.detail});
        }

        if (props_.dichotomy && naa) {
            ++counts["naa_enders"];
            const DichotomyResult r = dichotomy_check(detail::to_int_matrix(flat));
            switch (r.tail_class) {
                case TailClass::Nsnaa: ++counts["tail_nsnaa"]; break;
                case TailClass::Ssnaa: ++counts["tail_ssnaa"]; break;
                case TailClass::Violation:
                    ++counts["dichotomy_violations"];
                    report_.counterexamples.push_back({mask, "dichotomy: " + r.detail});
                    break;
            }
        }

        if (props_.epr2_forms && naa) {
            ++counts["epr2_checked"];
            const IntMatrix m = detail::to_int_matrix(flat);
            const EprSequence seq2 = epr2(m);
            std::string problems;
            if (classify_epr2_naa(seq2) == Epr2NaaForm::None)
                problems += "epr2 " + seq2.letters + " matches no admissible form; ";
            if (d % 2 != 0) problems += "det is odd; ";
            const bool first_letter_not_n = letter_at_flat(flat, 1) != 'N';
            if (n_ % 2 == 0 || first_letter_not_n) {
                int idx[kFlatCap];
                first_combination(idx, n_ - 1);
                do {
                    if (principal_minor_flat(flat, idx, n_ - 1) % 2 != 0) {
                        problems += "an order-(n-1) principal minor is odd; ";
                        break;
                    }
                } while (next_combination(idx, n_ - 1, n_));
            }
            if (!problems.empty()) {
                ++counts["epr2_violations"];
                report_.counterexamples.push_back({mask, "epr2: " + problems});
            }
        }

        if (props_.battery && nonsingular) {
            const EquimodFlat eq = equimodular_flat(flat, d);
            if (eq.equimodular) {
                ++counts["battery_checked"];
                const ConditionBattery bat = condition_battery(detail::to_int_matrix(flat));
                if (!bat.all_applicable_pass()) {
                    ++counts["battery_violations"];
                    std::string which;
                    for (const auto& r : bat.results)
                        if (r.verdict == Verdict::Fail) which += r.condition + " ";
                    report_.counterexamples.push_back({mask, "battery: failed " + which});
                }
            }
        }

        if (props_.odd_girth) {
            bool zero_diag = true;
            for (int i = 0; i < n_ && zero_diag; ++i)
                if (flat.get(i, i) != 0) zero_diag = false;
            if (zero_diag) {
                ++counts["odd_girth_checked"];
                OddGirth from_letters = OddGirth::infinite();
                for (int j = 1; j <= n_; j += 2)
                    if (letter_at_flat(flat, j) != 'N') {
                        from_letters = OddGirth::finite(j);
                        break;
                    }
                const OddGirth from_search =
                    odd_girth_search(graph_of(detail::to_int_matrix(flat)));
                if (!(from_letters == from_search)) {
                    ++counts["odd_girth_violations"];
                    report_.counterexamples.push_back(
                        {mask, "odd girth mismatch: epr says " + from_letters.str() +
                                   ", search says " + from_search.str()});
                }
            }
        }
    }

    int n_;
    ScanMode mode_;
    PropertySet props_;
    BigInt cursor_;
    ScanReport report_;
};

struct ScanOptions {
    Shard shard;
    int jobs = 1;
};

namespace detail {

inline ScanReport run_range(int n, ScanMode mode, const PropertySet& props,
                            const BigInt& lo, const BigInt& hi) {
    Scanner s(n, mode, props, lo, hi);
    while (!s.step(std::uint64_t(1) << 20)) {
    }
    return s.report();
}

inline ScanReport run_scan(int n, ScanMode mode, const PropertySet& props,
                           const ScanOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [lo, hi] = shard_range(n, opt.shard);
    ScanReport out;
    if (opt.jobs <= 1) {
        out = run_range(n, mode, props, lo, hi);
    } else {
        const int jobs = opt.jobs;
        std::vector<ScanReport> parts(static_cast<std::size_t>(jobs));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        const BigInt span = hi - lo;
        for (int j = 0; j < jobs; ++j) {
            const BigInt part_lo = lo + span * j / jobs;
            const BigInt part_hi = lo + span * (j + 1) / jobs;
            workers.emplace_back([&, j, part_lo, part_hi] {
                parts[static_cast<std::size_t>(j)] =
                    run_range(n, mode, props, part_lo, part_hi);
            });
        }
        for (auto& w : workers) w.join();
        out = parts[0];
        for (int j = 1; j < jobs; ++j) out = merge(out, parts[static_cast<std::size_t>(j)]);
    }
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace detail

/// Full conjecture pipeline over the shard: det != 0, then the tail test,
/// then equimodularity with constant diagonal via cofactors. Records every
/// matrix on which the two conjecture predicates disagree (both directions
/// are checked even though one is a theorem).
inline ScanReport scan_conjecture(int n, const ScanOptions& opt = {}) {
    return detail::run_scan(n, ScanMode::Conjecture, PropertySet{}, opt);
}

/// Runs the selected property validators over the shard and reports every
/// violation. Properties not applicable at this order are dropped.
inline ScanReport scan_properties(int n, PropertySet props, const ScanOptions& opt = {}) {
    if (!detail::effective_properties(n, props).any())
        throw PreconditionError("no applicable properties selected for this order");
    return detail::run_scan(n, ScanMode::Properties, props, opt);
}

} // namespace eprlab
