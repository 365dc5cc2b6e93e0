// Command-line front end for the knot-tunnel invariant library.
//
// Every subcommand prints a human-readable result; --json emits one
// self-contained record per input with fields {command, input, result,
// trace?} carrying the same values. Exit codes: 0 success, 2 invalid input.

#include "knottunnel/bounds.hpp"
#include "knottunnel/corridor.hpp"
#include "knottunnel/giantsteps.hpp"
#include "knottunnel/torus.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace kt = knottunnel;
using nlohmann::json;

namespace {

constexpr int kExitInvalidInput = 2;

json mat_json(const kt::Mat2& m) {
    return json::array({json::array({m.a.str(), m.b.str()}),
                        json::array({m.c.str(), m.d.str()})});
}

std::string join(const std::vector<kt::Integer>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ", ";
        os << values[i];
    }
    return os.str();
}

void emit(const json& record, bool as_json) {
    if (as_json) {
        std::cout << record.dump() << '\n';
    }
}

kt::Integer parse_integer(const std::string& text) {
    return kt::Integer(text);
}

struct Options {
    bool verbose = false;
    bool as_json = false;
};

int run_gst(const std::string& s_text, const Options& opt) {
    kt::SString s = kt::parse_sstring(s_text);
    kt::GiantStepCount result = kt::count_minimal_fast(s);

    json record{{"command", "gst"}, {"input", s.bits},
                {"result", result.count.str()}};
    if (!opt.as_json) {
        std::cout << result.count << '\n';
    }
    if (s.contains_one()) {
        const kt::BlockDecomposition& d = result.decomposition;
        json trace;
        trace["blocks"] = d.blocks;
        json configs = json::array();
        for (kt::Config c : d.configs) configs.push_back(kt::to_string(c));
        trace["configs"] = configs;
        json matrices = json::array();
        for (kt::Config c : d.configs) {
            matrices.push_back(mat_json(kt::transfer_matrix(c)));
        }
        trace["matrices"] = matrices;
        trace["product"] = mat_json(result.product);
        if (d.final_config) {
            trace["final_config"] = kt::to_string(*d.final_config);
        } else {
            trace["leftover_one"] = true;
        }
        trace["final_vector"] =
            json::array({d.final_vector.first, d.final_vector.second});
        record["trace"] = trace;

        if (opt.verbose && !opt.as_json) {
            std::cout << "The intermediate configurations are ";
            for (std::size_t i = 0; i < d.configs.size(); ++i) {
                if (i > 0) std::cout << ", ";
                std::cout << kt::to_string(d.configs[i]);
            }
            std::cout << ".\n";
            std::cout << "The transformation matrices are:\n";
            for (kt::Config c : d.configs) {
                std::cout << "  " << kt::to_string(kt::transfer_matrix(c))
                          << '\n';
            }
            std::cout << "Their product is " << kt::to_string(result.product)
                      << ".\n";
            if (d.final_config) {
                std::cout << "The final block has configuration "
                          << kt::to_string(*d.final_config) << ".\n";
            } else {
                std::cout << "A 1 is left over at the end.\n";
            }
            std::cout << "This tunnel has " << result.count
                      << " minimal giant step constructions.\n";
        }
    }
    emit(record, opt.as_json);
    return 0;
}

int run_depth(const std::string& s_text, const Options& opt) {
    kt::SString s = kt::parse_sstring(s_text);
    int d = kt::depth(s);
    if (!opt.as_json) std::cout << d << '\n';
    emit(json{{"command", "depth"}, {"input", s.bits}, {"result", d}},
         opt.as_json);
    return 0;
}

int run_bridge(const std::string& s_text, const kt::Integer& c2,
               const kt::Integer& c3, bool is_upper, const Options& opt) {
    kt::SString s = kt::parse_sstring(s_text);
    kt::IterationResult r =
        is_upper ? kt::additive_iteration(s, kt::first_regular_index(s),
                                          kt::first_regular_index(s) + 1)
                 : kt::additive_iteration(s, c2, c3);
    const char* command = is_upper ? "bridge-ub" : "bridge-lb";
    json record{{"command", command}, {"input", s.bits},
                {"result", r.final_value.str()}};
    json sequence = json::array();
    for (const kt::Integer& v : r.values) sequence.push_back(v.str());
    record["trace"] = {{"m", r.m}, {"sequence", sequence}};
    if (!opt.as_json) {
        std::cout << r.final_value << '\n';
        if (opt.verbose) {
            std::cout << "The iteration sequence is:\n  " << join(r.values)
                      << '\n';
        }
    }
    emit(record, opt.as_json);
    return 0;
}

json trace_json(const kt::CablingTrace& trace) {
    json steps = json::array();
    for (const kt::CablingStep& step : trace.steps) {
        json j{{"letter", kt::to_string(step.letter)},
               {"matrix", mat_json(step.matrix)},
               {"stage_knot", json::array({step.stage_knot.first.str(),
                                           step.stage_knot.second.str()})}};
        if (step.slope) j["slope"] = step.slope->str();
        steps.push_back(j);
    }
    std::string letters;
    for (kt::Letter l : trace.letters) letters += kt::to_string(l);
    return json{{"cf", kt::to_string(trace.cf)},
                {"letters", letters},
                {"m0", kt::to_string(trace.m0)},
                {"steps", steps},
                {"s_string", trace.s_string.bits}};
}

int run_torus_slopes(const kt::Integer& p, const kt::Integer& q,
                     const Options& opt) {
    kt::NormalizedTorus nt = kt::normalize(kt::TorusInput{p, q});
    kt::CablingTrace trace = kt::cabling_trace(nt);
    std::string line = kt::slope_line(trace);
    if (!opt.as_json) {
        std::cout << line << '\n';
        if (opt.verbose) {
            std::cout << "cf " << kt::to_string(trace.cf) << "\nletters ";
            for (kt::Letter l : trace.letters) std::cout << kt::to_string(l);
            std::cout << "\ns-string " << trace.s_string.bits << '\n';
            for (const kt::CablingStep& step : trace.steps) {
                std::cout << kt::to_string(step.letter) << ' '
                          << kt::to_string(step.matrix) << " stage ("
                          << step.stage_knot.first << ','
                          << step.stage_knot.second << ")\n";
            }
        }
    }
    emit(json{{"command", "torus-slopes"},
              {"input", json::array({p.str(), q.str()})},
              {"result", line},
              {"trace", trace_json(trace)}},
         opt.as_json);
    return 0;
}

int run_torus_scalar(const std::string& command, const kt::Integer& p,
                     const kt::Integer& q, const Options& opt) {
    kt::NormalizedTorus nt = kt::normalize(kt::TorusInput{p, q});
    json record{{"command", command},
                {"input", json::array({p.str(), q.str()})}};
    std::string out;
    if (command == "torus-depth") {
        int d = kt::torus_depth(nt);
        out = std::to_string(d);
        record["result"] = d;
    } else if (command == "torus-sstring") {
        out = nt.q < 2 ? "" : kt::torus_sstring(nt).bits;
        record["result"] = out;
    } else { // torus-classify
        out = kt::to_string(kt::torus_classify(kt::TorusInput{p, q}));
        record["result"] = out;
    }
    if (!opt.as_json) std::cout << out << '\n';
    emit(record, opt.as_json);
    return 0;
}

int run_torus_table(const kt::Integer& p, long from, long to,
                    const std::string& field, const Options& opt) {
    json results = json::array();
    std::ostringstream line;
    bool any = false;
    for (long n = from; n <= to; ++n) {
        kt::TorusInput input{p, n};
        kt::NormalizedTorus nt = kt::normalize(input);
        std::string value;
        if (field == "depth") {
            value = std::to_string(kt::torus_depth(nt));
        } else if (field == "sstring") {
            value = nt.q < 2 ? "" : kt::torus_sstring(nt).bits;
        } else if (field == "class") {
            value = kt::to_string(kt::torus_classify(input));
        } else if (field == "bridge") {
            value = kt::torus_bridge_number(nt).str();
        } else if (field == "slopes") {
            value = nt.q < 2 ? "trivial"
                             : kt::slope_line(kt::cabling_trace(nt));
        } else {
            throw CLI::ValidationError("unknown field: " + field);
        }
        results.push_back(value);
        if (any) line << (field == "slopes" ? "\n" : ",");
        line << value;
        any = true;
    }
    if (!opt.as_json) std::cout << line.str() << '\n';
    emit(json{{"command", "torus-table"},
              {"input", json{{"p", p.str()}, {"from", from}, {"to", to},
                             {"field", field}}},
              {"result", results}},
         opt.as_json);
    return 0;
}

int run_verify(int max_len, long max_pq, const Options& opt) {
    long strings = 0;
    long string_mismatches = 0;
    std::string first_counterexample;

    // Exhaustive fast-vs-oracle giant-step comparison.
    for (int len = 1; len <= max_len; ++len) {
        for (unsigned long code = 0; code < (1ul << len); ++code) {
            std::string bits(len, '0');
            for (int b = 0; b < len; ++b) {
                if (code & (1ul << b)) bits[b] = '1';
            }
            kt::SString s{bits};
            ++strings;
            if (kt::count_minimal_fast(s).count !=
                kt::count_minimal_oracle(s)) {
                ++string_mismatches;
                if (first_counterexample.empty()) first_counterexample = bits;
            }
        }
    }

    // Torus invariant sweep over all coprime pairs 2 <= q < p <= max_pq.
    long pairs = 0;
    long pair_violations = 0;
    for (long p = 3; p <= max_pq; ++p) {
        for (long q = 2; q < p; ++q) {
            kt::TorusInput input{p, q};
            kt::NormalizedTorus nt;
            try {
                nt = kt::normalize(input);
            } catch (const std::domain_error&) {
                continue; // torus link
            }
            ++pairs;
            kt::CablingTrace trace = kt::cabling_trace(nt);
            bool ok = true;
            for (const kt::CablingStep& step : trace.steps) {
                if (kt::det(step.matrix) != 1) ok = false;
                if (step.slope && *step.slope % 2 == 0) ok = false;
            }
            const auto& last = trace.steps.back();
            if (last.stage_knot.first != p || last.stage_knot.second != q) {
                ok = false;
            }
            bool regular_by_mod = p % q != 1 && p % q != q - 1;
            bool regular_by_s = trace.s_string.contains_one();
            bool regular_by_depth = kt::torus_depth(nt) >= 2;
            if (regular_by_mod != regular_by_s ||
                regular_by_s != regular_by_depth) {
                ok = false;
            }
            if (!ok) {
                ++pair_violations;
                if (first_counterexample.empty()) {
                    first_counterexample =
                        "(" + std::to_string(p) + "," + std::to_string(q) + ")";
                }
            }
        }
    }

    std::ostringstream report;
    report << string_mismatches << " mismatches over " << strings
           << " strings; " << pair_violations << " violations over " << pairs
           << " coprime pairs";
    if (!first_counterexample.empty()) {
        report << "; first counterexample: " << first_counterexample;
    }
    if (!opt.as_json) std::cout << report.str() << '\n';
    emit(json{{"command", "verify"},
              {"input", json{{"max_len", max_len}, {"max_pq", max_pq}}},
              {"result", report.str()},
              {"trace", json{{"strings", strings},
                             {"string_mismatches", string_mismatches},
                             {"pairs", pairs},
                             {"pair_violations", pair_violations}}}},
         opt.as_json);
    return (string_mismatches == 0 && pair_violations == 0) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial invariants of tunnel-number-one knot tunnels"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--verbose,-v", opt.verbose, "print the full trace");
    app.add_flag("--json", opt.as_json,
                 "emit one machine-readable record per input");

    std::string s_text;
    std::string c2_text = "2", c3_text = "2";
    std::string p_text, q_text;
    long scalar = 0;
    long fib_n = 0, fib_m = 0;
    long from = 2, to = 40;
    std::string field = "depth";
    int max_len = 14;
    long max_pq = 200;

    auto* gst = app.add_subcommand("gst", "minimal giant-step count");
    gst->add_option("s", s_text, "s-string s_2...s_n")->required();

    auto* depth_cmd = app.add_subcommand("depth", "tunnel depth");
    depth_cmd->add_option("s", s_text)->required();

    auto* lb = app.add_subcommand("bridge-lb", "bridge-number lower bound");
    lb->add_option("s", s_text)->required();
    lb->add_option("--c2", c2_text, "bridge number at tau_{m-2}");
    lb->add_option("--c3", c3_text, "bridge number at tau_{m-1}");

    auto* ub = app.add_subcommand("bridge-ub", "bridge-number upper bound");
    ub->add_option("s", s_text)->required();

    auto* minb = app.add_subcommand("minbridge",
                                    "minimum bridge number at depth d");
    minb->add_option("d", scalar)->required();

    auto* tminb = app.add_subcommand(
        "torus-minbridge", "minimum torus-knot bridge number at depth d");
    tminb->add_option("d", scalar)->required();

    auto* maxb = app.add_subcommand("maxbridge",
                                    "maximum bridge number after n cablings");
    maxb->add_option("n", scalar)->required();

    auto* fibub = app.add_subcommand("fib-ub", "Fibonacci upper bound");
    fibub->add_option("n", fib_n)->required();
    fibub->add_option("m", fib_m)->required();

    auto* slopes = app.add_subcommand("torus-slopes",
                                      "slope sequence of the short tunnel");
    slopes->add_option("p", p_text)->required();
    slopes->add_option("q", q_text)->required();

    auto* tdepth = app.add_subcommand("torus-depth",
                                      "depth of the short tunnel");
    tdepth->add_option("p", p_text)->required();
    tdepth->add_option("q", q_text)->required();

    auto* tsstring = app.add_subcommand("torus-sstring",
                                        "s-string of the short tunnel");
    tsstring->add_option("p", p_text)->required();
    tsstring->add_option("q", q_text)->required();

    auto* tclassify = app.add_subcommand("torus-classify",
                                         "classification of the short tunnel");
    tclassify->add_option("p", p_text)->required();
    tclassify->add_option("q", q_text)->required();

    auto* table = app.add_subcommand("torus-table",
                                     "batch table over (p, from..to)");
    table->add_option("p", p_text)->required();
    table->add_option("--from", from);
    table->add_option("--to", to);
    table->add_option("--field", field,
                      "depth | slopes | sstring | class | bridge");

    auto* verify = app.add_subcommand("verify", "self-verification harness");
    verify->add_option("--max-len", max_len, "max s-string length");
    verify->add_option("--max-pq", max_pq, "max torus p");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gst->parsed()) return run_gst(s_text, opt);
        if (depth_cmd->parsed()) return run_depth(s_text, opt);
        if (lb->parsed()) {
            return run_bridge(s_text, parse_integer(c2_text),
                              parse_integer(c3_text), false, opt);
        }
        if (ub->parsed()) return run_bridge(s_text, 0, 0, true, opt);
        if (minb->parsed() || tminb->parsed()) {
            bool torus = tminb->parsed();
            kt::Integer v = torus
                                ? kt::torus_min_bridge_at_depth(
                                      static_cast<int>(scalar))
                                : kt::min_bridge_at_depth(
                                      static_cast<int>(scalar));
            if (!opt.as_json) std::cout << v << '\n';
            emit(json{{"command", torus ? "torus-minbridge" : "minbridge"},
                      {"input", scalar},
                      {"result", v.str()}},
                 opt.as_json);
            return 0;
        }
        if (maxb->parsed()) {
            kt::Integer v = kt::max_bridge(static_cast<int>(scalar));
            if (!opt.as_json) std::cout << v << '\n';
            emit(json{{"command", "maxbridge"}, {"input", scalar},
                      {"result", v.str()}},
                 opt.as_json);
            return 0;
        }
        if (fibub->parsed()) {
            kt::Integer v = kt::fibonacci_upper(static_cast<int>(fib_n),
                                                static_cast<int>(fib_m));
            if (!opt.as_json) std::cout << v << '\n';
            emit(json{{"command", "fib-ub"},
                      {"input", json::array({fib_n, fib_m})},
                      {"result", v.str()}},
                 opt.as_json);
            return 0;
        }
        if (slopes->parsed()) {
            return run_torus_slopes(parse_integer(p_text),
                                    parse_integer(q_text), opt);
        }
        if (tdepth->parsed() || tsstring->parsed() || tclassify->parsed()) {
            std::string command = tdepth->parsed() ? "torus-depth"
                                  : tsstring->parsed() ? "torus-sstring"
                                                       : "torus-classify";
            return run_torus_scalar(command, parse_integer(p_text),
                                    parse_integer(q_text), opt);
        }
        if (table->parsed()) {
            return run_torus_table(parse_integer(p_text), from, to, field,
                                   opt);
        }
        if (verify->parsed()) return run_verify(max_len, max_pq, opt);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return 0;
}
