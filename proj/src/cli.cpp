#include "rootpair/cli.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <thread>

#include "rootpair/bounds.hpp"
#include "rootpair/characters.hpp"
#include "rootpair/counting.hpp"
#include "rootpair/errors.hpp"
#include "rootpair/numtheory.hpp"
#include "rootpair/report.hpp"

namespace rootpair {

namespace {

constexpr uint64_t kPrimeLo = 3;
constexpr uint64_t kPrimeHi = 10'000'000;
constexpr uint64_t kDegreeCap = 64;
constexpr double kOracleTol = 1e-6;

// ---- polynomial spec parsing ----

class SpecParser {
public:
    explicit SpecParser(const std::string& spec) : s_(spec) {}

    std::vector<std::pair<int64_t, uint32_t>> parse() {
        std::vector<std::pair<int64_t, uint32_t>> terms;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial spec", 0);
        }
        bool negative = consume_sign(false);
        for (;;) {
            terms.push_back(parse_term(negative));
            skip_ws();
            if (at_end()) {
                break;
            }
            negative = consume_sign(true);
        }
        return terms;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }

    void skip_ws() {
        while (!at_end() && (s_[i_] == ' ' || s_[i_] == '\t')) {
            ++i_;
        }
    }

    bool digit() const { return !at_end() && s_[i_] >= '0' && s_[i_] <= '9'; }

    [[noreturn]] void fail(const std::string& what, size_t pos) const {
        throw usage_error("polynomial spec error at position "
                          + std::to_string(pos + 1) + ": " + what);
    }

    // A '+'/'-' between terms (required) or before the first one (optional).
    bool consume_sign(bool required) {
        skip_ws();
        if (!at_end() && (s_[i_] == '+' || s_[i_] == '-')) {
            const bool negative = s_[i_] == '-';
            ++i_;
            return negative;
        }
        if (required) {
            fail("expected '+' or '-' between terms", i_);
        }
        return false;
    }

    uint64_t parse_number(const char* what, uint64_t cap, const char* cap_msg) {
        skip_ws();
        const size_t start = i_;
        if (!digit()) {
            fail(std::string("expected ") + what, i_);
        }
        uint64_t v = 0;
        while (digit()) {
            const uint64_t d = static_cast<uint64_t>(s_[i_] - '0');
            if (v > (cap - d) / 10) {
                fail(cap_msg, start);
            }
            v = v * 10 + d;
            ++i_;
        }
        return v;
    }

    std::pair<int64_t, uint32_t> parse_term(bool negative) {
        skip_ws();
        if (at_end()) {
            fail("expected a term", i_);
        }
        int64_t c = 1;
        bool have_coeff = false;
        if (digit()) {
            c = static_cast<int64_t>(parse_number(
                "a coefficient", static_cast<uint64_t>(INT64_MAX),
                "coefficient too large"));
            have_coeff = true;
            skip_ws();
            if (!at_end() && s_[i_] == '*') {
                ++i_;
                skip_ws();
                if (at_end() || s_[i_] != 'x') {
                    fail("expected 'x' after '*'", i_);
                }
            }
        }
        uint32_t e = 0;
        skip_ws();
        if (!at_end() && s_[i_] == 'x') {
            ++i_;
            e = 1;
            skip_ws();
            if (!at_end() && s_[i_] == '^') {
                ++i_;
                e = static_cast<uint32_t>(parse_number(
                    "an exponent", kDegreeCap,
                    "exponent exceeds the degree cap 64"));
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 'x'", i_);
        }
        return {negative ? -c : c, e};
    }

    const std::string& s_;
    size_t i_ = 0;
};

// Combine like terms mod p and build the reduced polynomial. Constants are
// rejected here so sweeps can skip a prime where the spec degenerates.
Polynomial reduce_terms(const std::vector<std::pair<int64_t, uint32_t>>& terms,
                        uint32_t p) {
    uint32_t max_e = 0;
    for (const auto& [c, e] : terms) {
        max_e = std::max(max_e, e);
    }
    std::vector<int64_t> dense(max_e + 1, 0);
    const int64_t sp = static_cast<int64_t>(p);
    for (const auto& [c, e] : terms) {
        dense[e] = (dense[e] + c % sp) % sp;
    }
    Polynomial f = Polynomial::from_integers(dense, p);
    if (f.is_zero() || f.is_constant()) {
        throw usage_error("polynomial reduces to a constant mod "
                          + std::to_string(p));
    }
    return f;
}

// ---- report assembly ----

struct Outcome {
    Document doc;
    bool all_hold = true;
    std::vector<std::string> notes;
};

Cell uint_cell(uint64_t v) { return Cell::integer(static_cast<int64_t>(v)); }

std::vector<std::string> theorem_columns() {
    return {"p",     "alpha", "poly",      "k",           "r_f",   "omega",
            "phi",   "exact", "main_term", "error_bound", "theta", "holds"};
}

std::vector<Cell> theorem_row(const TheoremReport& r) {
    return {uint_cell(r.p),
            Cell::integer(r.alpha),
            Cell::text(r.f_description),
            uint_cell(r.k),
            uint_cell(r.r_f),
            uint_cell(r.omega_pm1),
            uint_cell(r.phi_pm1),
            uint_cell(r.exact_count),
            Cell::real(r.main_term),
            Cell::real(r.error_bound),
            Cell::real(r.theta),
            Cell::boolean(r.theorem_holds)};
}

bool record_holds(const BoundCheckRecord& rec) {
    return rec.holds && (!rec.secondary || rec.secondary->holds);
}

std::string near_boundary_note(const TheoremReport& r) {
    return "p=" + std::to_string(r.p)
           + ": |theta| lies within 1e-6 of the boundary 1; the holds flag is "
             "numerically ambiguous";
}

uint32_t require_single_p(const RunConfig& cfg) {
    if (!cfg.p) {
        throw usage_error("this command requires --p");
    }
    if (*cfg.p > kPrimeHi) {
        throw usage_error("p exceeds the 10^7 cap");
    }
    return static_cast<uint32_t>(*cfg.p);
}

Outcome run_count(const RunConfig& cfg) {
    const PrimeField field = build_field(require_single_p(cfg));
    const Polynomial f = parse_poly(cfg.poly_spec, field);
    const PairCountInstance inst = make_instance(field, cfg.alpha, f);
    const uint64_t exact = count_bruteforce(inst);
    const DecompositionResult dec = count_decomposition(inst);
    const bool consistent =
        std::abs(dec.total - static_cast<double>(exact)) < kOracleTol;

    Table t;
    t.columns = {"p",         "alpha",     "poly",
                 "k",         "r_f",       "exact",
                 "decomposition_total",    "main_term",
                 "s1_mag",    "s2_mag",    "s12_mag",
                 "zero_adjust_mag",        "consistent"};
    t.rows.push_back({uint_cell(field.p()), Cell::integer(cfg.alpha),
                      Cell::text(to_string(f)), uint_cell(inst.k()),
                      uint_cell(inst.admissibility().r_f), uint_cell(exact),
                      Cell::real(dec.total), Cell::real(dec.main_term),
                      Cell::real(std::abs(dec.term_s1)),
                      Cell::real(std::abs(dec.term_s2)),
                      Cell::real(std::abs(dec.term_s12)),
                      Cell::real(std::abs(dec.term_zero_adjust)),
                      Cell::boolean(consistent)});
    Outcome o;
    o.doc.sections.push_back({"rows", std::move(t)});
    o.all_hold = consistent;
    if (!consistent) {
        o.notes.push_back("decomposition total disagrees with the exact count");
    }
    return o;
}

std::vector<Cell> claim_row(const BoundCheckRecord& rec) {
    std::vector<Cell> row{Cell::text(std::string(to_string(rec.lemma_id))),
                          Cell::real(rec.lhs), Cell::real(rec.rhs),
                          Cell::real(rec.slack), Cell::boolean(rec.holds)};
    if (rec.secondary) {
        row.push_back(Cell::text(rec.secondary->label));
        row.push_back(Cell::real(rec.secondary->lhs));
        row.push_back(Cell::real(rec.secondary->rhs));
        row.push_back(Cell::boolean(rec.secondary->holds));
    } else {
        for (int i = 0; i < 4; ++i) {
            row.push_back(Cell::empty());
        }
    }
    row.push_back(Cell::text(rec.note));
    return row;
}

std::vector<std::string> record_columns() {
    return {"lemma", "lhs",           "rhs",           "slack",
            "holds", "secondary",     "secondary_lhs", "secondary_rhs",
            "secondary_holds",        "note"};
}

Outcome run_verify(const RunConfig& cfg) {
    const PrimeField field = build_field(require_single_p(cfg));
    const Polynomial f = parse_poly(cfg.poly_spec, field);
    const PairCountInstance inst = make_instance(field, cfg.alpha, f);
    const TheoremReport rep = verify_theorem(inst);
    const std::vector<BoundCheckRecord> claims = verify_claims(inst);

    Outcome o;
    Table rows;
    rows.columns = theorem_columns();
    rows.rows.push_back(theorem_row(rep));
    o.doc.sections.push_back({"rows", std::move(rows)});

    Table claim_table;
    claim_table.columns = record_columns();
    o.all_hold = rep.theorem_holds;
    for (const BoundCheckRecord& rec : claims) {
        claim_table.rows.push_back(claim_row(rec));
        o.all_hold = o.all_hold && record_holds(rec);
    }
    o.doc.sections.push_back({"claims", std::move(claim_table)});
    if (rep.near_boundary) {
        o.notes.push_back(near_boundary_note(rep));
    }
    return o;
}

Outcome run_sweep(const RunConfig& cfg) {
    if (!cfg.p_range) {
        throw usage_error("sweep requires --p-range lo..hi");
    }
    const auto [lo, hi] = *cfg.p_range;
    if (lo < kPrimeLo || lo > hi || hi > kPrimeHi) {
        throw usage_error("p range must satisfy 3 <= lo <= hi <= 10^7");
    }
    const auto terms = parse_poly_terms(cfg.poly_spec); // syntax fails fast
    const std::vector<uint64_t> primes = primes_in_range(lo, hi);

    struct Slot {
        std::optional<TheoremReport> report;
        std::string skip_reason;
    };
    std::vector<Slot> slots(primes.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= primes.size()) {
                return;
            }
            try {
                const PrimeField field =
                    build_field(static_cast<uint32_t>(primes[idx]));
                try {
                    const PairCountInstance inst = make_instance(
                        field, cfg.alpha, reduce_terms(terms, field.p()));
                    slots[idx].report = verify_theorem(inst);
                } catch (const usage_error& e) {
                    slots[idx].skip_reason = e.what(); // constant at this p
                } catch (const hypothesis_error& e) {
                    slots[idx].skip_reason = e.what();
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };

    const size_t want = std::max<unsigned>(cfg.parallelism, 1);
    const size_t nthreads = std::min(want, std::max<size_t>(primes.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (size_t i = 0; i < nthreads; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Deterministic ordered merge: slots already sit in ascending-p order.
    Outcome o;
    Table t;
    t.columns = theorem_columns();
    for (size_t i = 0; i < primes.size(); ++i) {
        if (slots[i].report) {
            t.rows.push_back(theorem_row(*slots[i].report));
            o.all_hold = o.all_hold && slots[i].report->theorem_holds;
            if (slots[i].report->near_boundary) {
                o.notes.push_back(near_boundary_note(*slots[i].report));
            }
        } else {
            o.notes.push_back("skipped p=" + std::to_string(primes[i]) + ": "
                              + slots[i].skip_reason);
        }
    }
    o.doc.sections.push_back({"rows", std::move(t)});
    return o;
}

Outcome run_weil(const RunConfig& cfg) {
    const PrimeField field = build_field(require_single_p(cfg));
    const Polynomial f = parse_poly(cfg.poly_spec, field);

    Outcome o;
    Table t;
    t.columns = {"p",     "order", "chi_exponent", "poly",
                 "k",     "lhs",   "rhs",          "slack",
                 "holds", "restricted_lhs",        "restricted_rhs",
                 "restricted_holds",               "note"};
    size_t skipped = 0;
    std::string last_reason;
    for (uint64_t d : divisors(field.group_order_factors())) {
        if (d == 1) {
            continue; // the principal character is outside the hypothesis
        }
        const Character chi = characters_of_order(field, d).front();
        try {
            const BoundCheckRecord rec = verify_weil(field, chi, f);
            t.rows.push_back({uint_cell(field.p()), uint_cell(d),
                              uint_cell(chi.exponent()), Cell::text(to_string(f)),
                              uint_cell(f.degree()), Cell::real(rec.lhs),
                              Cell::real(rec.rhs), Cell::real(rec.slack),
                              Cell::boolean(rec.holds),
                              Cell::real(rec.secondary->lhs),
                              Cell::real(rec.secondary->rhs),
                              Cell::boolean(rec.secondary->holds),
                              Cell::text(rec.note)});
            o.all_hold = o.all_hold && record_holds(rec);
        } catch (const hypothesis_error& e) {
            ++skipped;
            last_reason = e.what();
            o.notes.push_back("skipped character order " + std::to_string(d)
                              + ": " + e.what());
        }
    }
    if (t.rows.empty() && skipped > 0) {
        throw hypothesis_error(last_reason);
    }
    o.doc.sections.push_back({"rows", std::move(t)});
    return o;
}

Outcome run_exists(const RunConfig& cfg) {
    const PrimeField field = build_field(require_single_p(cfg));
    const Polynomial f = parse_poly(cfg.poly_spec, field);
    const std::optional<uint32_t> xi = search_existence(field, f);

    Outcome o;
    Table t;
    t.columns = {"p", "poly", "exists", "xi"};
    t.rows.push_back({uint_cell(field.p()), Cell::text(to_string(f)),
                      Cell::boolean(xi.has_value()),
                      xi ? uint_cell(*xi) : Cell::empty()});
    o.doc.sections.push_back({"rows", std::move(t)});
    return o;
}

Outcome execute(const RunConfig& cfg) {
    if (cfg.parallelism == 0) {
        throw usage_error("parallelism must be at least 1");
    }
    switch (cfg.command) {
    case RunConfig::Command::count: return run_count(cfg);
    case RunConfig::Command::verify: return run_verify(cfg);
    case RunConfig::Command::sweep: return run_sweep(cfg);
    case RunConfig::Command::weil: return run_weil(cfg);
    case RunConfig::Command::exists: return run_exists(cfg);
    }
    throw usage_error("unknown command");
}

std::string serialize(const Document& doc, RunConfig::Format format) {
    switch (format) {
    case RunConfig::Format::json: return to_json(doc);
    case RunConfig::Format::csv: return to_csv(doc);
    case RunConfig::Format::table: return to_table(doc);
    }
    return to_table(doc);
}

} // namespace

std::pair<uint64_t, uint64_t> parse_p_range(const std::string& text) {
    const size_t sep = text.find("..");
    if (sep == std::string::npos) {
        throw usage_error("p range must have the form lo..hi");
    }
    auto parse_u64 = [&](size_t begin, size_t end, const char* what) {
        uint64_t v = 0;
        const char* first = text.data() + begin;
        const char* last = text.data() + end;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (first == last || ec != std::errc{} || ptr != last) {
            throw usage_error(std::string("invalid ") + what
                              + " in p range: " + text);
        }
        return v;
    };
    const uint64_t lo = parse_u64(0, sep, "lower bound");
    const uint64_t hi = parse_u64(sep + 2, text.size(), "upper bound");
    if (lo < kPrimeLo || lo > hi || hi > kPrimeHi) {
        throw usage_error("p range must satisfy 3 <= lo <= hi <= 10^7");
    }
    return {lo, hi};
}

std::vector<std::pair<int64_t, uint32_t>> parse_poly_terms(const std::string& spec) {
    return SpecParser(spec).parse();
}

Polynomial parse_poly(const std::string& spec, const PrimeField& field) {
    return reduce_terms(parse_poly_terms(spec), field.p());
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
    try {
        const Outcome outcome = execute(config);
        const std::string text = serialize(outcome.doc, config.output_format);
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) {
                throw usage_error("cannot open output file: "
                                  + *config.output_path);
            }
            file << text;
            file.flush();
            if (!file) {
                throw usage_error("failed writing output file: "
                                  + *config.output_path);
            }
        } else {
            out << text;
        }
        for (const std::string& note : outcome.notes) {
            log << "note: " << note << '\n';
        }
        if (!outcome.all_hold) {
            log << "verification failed: a checked bound does not hold\n";
            return 3;
        }
        return 0;
    } catch (const usage_error& e) {
        log << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const hypothesis_error& e) {
        log << "hypothesis violated: " << e.what() << '\n';
        return 2;
    } catch (const internal_check_error& e) {
        log << "internal check failed: " << e.what() << '\n';
        return 3;
    }
}

} // namespace rootpair
