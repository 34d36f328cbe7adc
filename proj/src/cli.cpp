#include "tss/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tss/modes.hpp"
#include "tss/report.hpp"
#include "tss/ring.hpp"
#include "tss/row.hpp"
#include "tss/series.hpp"

namespace tss::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format format_from_name(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw UsageError("unknown format '" + name + "' (expected text, json, or csv)");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::optional<std::int64_t> parse_int(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::int64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos != std::string::npos) {
        const auto lo = parse_int(text.substr(0, pos));
        const auto hi = parse_int(text.substr(pos + 2));
        if (lo && hi && *lo <= *hi) return {*lo, *hi};
    }
    throw UsageError("invalid range '" + text + "' (expected A..B with A <= B)");
}

template <typename Range, typename ToString>
std::string join(const Range& items, const char* sep, ToString to_string) {
    std::string out;
    bool first = true;
    for (const auto& item : items) {
        if (!first) out += sep;
        out += to_string(item);
        first = false;
    }
    return out;
}

template <typename Range>
std::string join_numbers(const Range& items, const char* sep = ",") {
    return join(items, sep, [](auto v) { return std::to_string(v); });
}

void print_wrapped(std::ostream& out, const std::string& command, ordered_json params,
                   ordered_json result) {
    ordered_json wrap;
    wrap["command"] = command;
    wrap["params"] = std::move(params);
    wrap["result"] = std::move(result);
    out << wrap.dump(2) << '\n';
}

// series ---------------------------------------------------------------

int cmd_series(const std::string& form_name, int count, bool one_based, Format format,
               std::ostream& out, std::ostream& err) {
    const auto form = series::form_from_name(form_name);
    if (!form) throw UsageError("unknown form '" + form_name + "'");
    if (count < 1) throw UsageError("count must be at least 1");
    const series::Series s = series::generate(*form, count);

    const series::Series check = series::by_recurrence(count);
    for (int n = 0; n < count; ++n) {
        const int by_closed =
            series::closed_form(n, series::Form::Prime).value();
        if (check.pitch_classes.pitches()[static_cast<std::size_t>(n)] != by_closed) {
            err << "counterexample: recurrence and closed form disagree at n=" << n << '\n';
            return kCounterexample;
        }
    }

    const int shift = one_based ? 1 : 0;
    std::ostringstream payload;
    switch (format) {
        case Format::Text:
        case Format::Csv: {
            const char* sep = format == Format::Csv ? "," : " ";
            payload << "index" << sep << "absolute" << sep << "pitch_class" << '\n';
            for (int n = 0; n < count; ++n)
                payload << n + shift << sep << s.absolute[static_cast<std::size_t>(n)] << sep
                        << s.pitch_classes.pitches()[static_cast<std::size_t>(n)] << '\n';
            break;
        }
        case Format::Json: {
            ordered_json params{{"form", form_name}, {"count", count},
                                {"one_based", one_based}};
            ordered_json sounds = ordered_json::array();
            for (int n = 0; n < count; ++n)
                sounds.push_back({{"index", n + shift},
                                  {"absolute", s.absolute[static_cast<std::size_t>(n)]},
                                  {"pitch_class",
                                   s.pitch_classes.pitches()[static_cast<std::size_t>(n)]}});
            print_wrapped(payload, "series", std::move(params),
                          ordered_json{{"form", form_name}, {"sounds", std::move(sounds)}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

// transform ------------------------------------------------------------

rows::Row parse_row(const std::string& text, ring::Modulus modulus) {
    std::vector<std::int64_t> pitches;
    for (const std::string& part : split(text, ',')) {
        const auto value = parse_int(part);
        if (!value) throw UsageError("invalid row entry '" + part + "'");
        pitches.push_back(*value);
    }
    return rows::Row(modulus, std::move(pitches));
}

rows::Row apply_op(const rows::Row& row, const std::string& op) {
    if (op == "I") return rows::invert(row);
    if (op == "R") return rows::retrograde(row);
    if (op.size() > 1 && op[0] == 'T') {
        const auto k = parse_int(op.substr(1));
        if (k) return rows::transpose(row, *k);
    }
    throw UsageError("invalid operator '" + op + "' (expected T<k>, I, or R)");
}

int cmd_transform(const std::string& row_text, int modulus_value,
                  const std::string& ops_text, Format format, std::ostream& out) {
    if (modulus_value < 2) throw UsageError("modulus must be at least 2");
    const ring::Modulus modulus(modulus_value);
    rows::Row row = [&] {
        try {
            return parse_row(row_text, modulus);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const std::vector<std::string> ops = split(ops_text, ',');
    for (const std::string& op : ops) row = apply_op(row, op);

    std::ostringstream payload;
    switch (format) {
        case Format::Text:
            payload << join_numbers(row.pitches()) << '\n';
            break;
        case Format::Csv:
            payload << "position,pitch_class" << '\n';
            for (std::size_t s = 0; s < row.size(); ++s)
                payload << s << ',' << row.pitches()[s] << '\n';
            break;
        case Format::Json: {
            ordered_json params{{"row", ordered_json::parse("[" + row_text + "]",
                                                            nullptr, false)},
                                {"modulus", modulus_value}, {"ops", ops}};
            if (params["row"].is_discarded()) params["row"] = row_text;
            print_wrapped(payload, "transform", std::move(params),
                          ordered_json{{"row", row.pitches()},
                                       {"modulus", modulus_value}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

// modes ----------------------------------------------------------------

int cmd_modes(const std::string& kind_text, int count, bool one_based, Format format,
              std::ostream& out) {
    const auto kind = modes::kind_from_name(kind_text);
    if (!kind) throw UsageError("unknown mode kind '" + kind_text + "'");
    if (count < 1) throw UsageError("count must be at least 1");
    const modes::ModeSeries m = modes::generate(*kind, count);
    const modes::Pattern pattern = modes::pattern_of(*kind);
    const modes::Projection projection = modes::project(*kind);

    const int shift = one_based ? 1 : 0;
    const auto quart_class = [&](int n) {
        return m.absolute[static_cast<std::size_t>(n)] % 5;
    };
    std::ostringstream payload;
    switch (format) {
        case Format::Text: {
            payload << "kind=" << kind_text << " pattern="
                    << join_numbers(pattern.steps(), "+") << " projection="
                    << join(projection.triple, ",",
                            [](ring::Residue r) { return std::to_string(r.value()); })
                    << '\n';
            payload << "index absolute pitch_class quart_class" << '\n';
            for (int n = 0; n < count; ++n)
                payload << n + shift << ' ' << m.absolute[static_cast<std::size_t>(n)] << ' '
                        << m.pitch_classes.pitches()[static_cast<std::size_t>(n)] << ' '
                        << quart_class(n) << '\n';
            break;
        }
        case Format::Csv:
            payload << "index,absolute,pitch_class,quart_class" << '\n';
            for (int n = 0; n < count; ++n)
                payload << n + shift << ',' << m.absolute[static_cast<std::size_t>(n)] << ','
                        << m.pitch_classes.pitches()[static_cast<std::size_t>(n)] << ','
                        << quart_class(n) << '\n';
            break;
        case Format::Json: {
            ordered_json params{{"kind", kind_text}, {"count", count},
                                {"one_based", one_based}};
            ordered_json sounds = ordered_json::array();
            for (int n = 0; n < count; ++n)
                sounds.push_back({{"index", n + shift},
                                  {"absolute", m.absolute[static_cast<std::size_t>(n)]},
                                  {"pitch_class",
                                   m.pitch_classes.pitches()[static_cast<std::size_t>(n)]},
                                  {"quart_class", quart_class(n)}});
            ordered_json triple = ordered_json::array();
            for (ring::Residue r : projection.triple) triple.push_back(r.value());
            print_wrapped(payload, "modes", std::move(params),
                          ordered_json{{"kind", kind_text},
                                       {"pattern", pattern.steps()},
                                       {"projection", std::move(triple)},
                                       {"sounds", std::move(sounds)}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

// analyze --------------------------------------------------------------

int analyze_coverage(const std::string& form_name, Format format, std::ostream& out) {
    const auto form = series::form_from_name(form_name);
    if (!form) throw UsageError("unknown form '" + form_name + "'");
    const series::CoverageReport c = series::coverage(*form);

    std::ostringstream payload;
    switch (format) {
        case Format::Text:
            payload << "form=" << form_name << '\n';
            payload << "reachable=" << join_numbers(c.reachable) << '\n';
            payload << "missing=" << join_numbers(c.missing) << '\n';
            payload << "witnesses="
                    << join(c.witnesses, ",",
                            [](const auto& kv) {
                                return std::to_string(kv.first) + ":" +
                                       std::to_string(kv.second);
                            })
                    << '\n';
            break;
        case Format::Csv:
            payload << "pitch_class,reachable,witness" << '\n';
            for (int m = 0; m < 12; ++m) {
                const bool reachable = c.reachable.contains(m);
                payload << m << ',' << (reachable ? "true" : "false") << ',';
                if (reachable) payload << c.witnesses.at(m);
                payload << '\n';
            }
            break;
        case Format::Json: {
            ordered_json witnesses;
            for (const auto& [m, n] : c.witnesses) witnesses[std::to_string(m)] = n;
            print_wrapped(payload, "analyze",
                          ordered_json{{"target", "coverage"}, {"form", form_name}},
                          ordered_json{{"form", form_name},
                                       {"reachable", c.reachable},
                                       {"missing", c.missing},
                                       {"witnesses", std::move(witnesses)}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

int analyze_reiterations(Format format, std::ostream& out) {
    const series::ReiterationReport r = series::reiterations();
    const auto pitches = series::generate(series::Form::Prime, 12).pitch_classes.pitches();

    std::ostringstream payload;
    switch (format) {
        case Format::Text:
            payload << "pairs="
                    << join(r.pairs, ",",
                            [](const auto& p) {
                                return std::to_string(p.first) + ":" +
                                       std::to_string(p.second);
                            })
                    << '\n';
            payload << "distinct_count=" << r.distinct_count << '\n';
            payload << "non_reiterated=" << join_numbers(r.non_reiterated) << '\n';
            break;
        case Format::Csv:
            payload << "position_a,position_b,pitch_class" << '\n';
            for (const auto& [a, b] : r.pairs)
                payload << a << ',' << b << ',' << pitches[static_cast<std::size_t>(a)]
                        << '\n';
            break;
        case Format::Json: {
            ordered_json pairs = ordered_json::array();
            for (const auto& [a, b] : r.pairs) pairs.push_back({a, b});
            print_wrapped(payload, "analyze", ordered_json{{"target", "reiterations"}},
                          ordered_json{{"pairs", std::move(pairs)},
                                       {"distinct_count", r.distinct_count},
                                       {"non_reiterated", r.non_reiterated}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

int analyze_period(const std::string& series_name, Format format, std::ostream& out) {
    std::ostringstream payload;
    if (series_name == "atss") {
        const series::PeriodReport p = series::period_report();
        const std::string note =
            "figures are computed from the generated offsets; the 24-sound span is " +
            std::to_string(p.span_semitones) + " semitones, exactly " +
            report::to_string(p.span_octaves) + " octaves";
        switch (format) {
            case Format::Text:
                payload << "series=atss" << '\n';
                payload << "period=" << p.period << '\n';
                payload << "span_semitones=" << p.span_semitones << '\n';
                payload << "span_octaves=" << report::to_string(p.span_octaves) << '\n';
                payload << "first_return_index=" << p.first_return_index << '\n';
                payload << "first_return_absolute=" << p.first_return_absolute << '\n';
                payload << "note=" << note << '\n';
                break;
            case Format::Csv:
                payload << "quantity,value" << '\n';
                payload << "period," << p.period << '\n';
                payload << "span_semitones," << p.span_semitones << '\n';
                payload << "span_octaves," << report::to_string(p.span_octaves) << '\n';
                payload << "first_return_index," << p.first_return_index << '\n';
                payload << "first_return_absolute," << p.first_return_absolute << '\n';
                break;
            case Format::Json:
                print_wrapped(payload, "analyze",
                              ordered_json{{"target", "period"}, {"series", "atss"}},
                              ordered_json{{"series", "atss"},
                                           {"period", p.period},
                                           {"span_semitones", p.span_semitones},
                                           {"span_octaves", report::to_string(p.span_octaves)},
                                           {"first_return_index", p.first_return_index},
                                           {"first_return_absolute", p.first_return_absolute},
                                           {"note", note}});
                break;
        }
    } else {
        const auto kind = modes::kind_from_name(series_name);
        if (!kind)
            throw UsageError("unknown series '" + series_name +
                             "' (expected atss or a mode kind)");
        const modes::ModePeriod p = modes::mode_period(*kind);
        switch (format) {
            case Format::Text:
                payload << "series=" << series_name << '\n';
                payload << "sounds=" << p.sounds << '\n';
                payload << "semitones=" << p.semitones << '\n';
                payload << "octaves=" << report::to_string(p.octaves) << '\n';
                break;
            case Format::Csv:
                payload << "quantity,value" << '\n';
                payload << "sounds," << p.sounds << '\n';
                payload << "semitones," << p.semitones << '\n';
                payload << "octaves," << report::to_string(p.octaves) << '\n';
                break;
            case Format::Json:
                print_wrapped(payload, "analyze",
                              ordered_json{{"target", "period"}, {"series", series_name}},
                              ordered_json{{"series", series_name},
                                           {"sounds", p.sounds},
                                           {"semitones", p.semitones},
                                           {"octaves", report::to_string(p.octaves)}});
                break;
        }
    }
    out << payload.str();
    return kOk;
}

int analyze_zero_divisors(int modulus_value, Format format, std::ostream& out) {
    if (modulus_value < 2) throw UsageError("modulus must be at least 2");
    const ring::Modulus modulus(modulus_value);
    const std::vector<ring::Residue> divisors = ring::zero_divisors(modulus);
    const bool field = divisors.empty();
    std::vector<std::pair<int, int>> pairs;
    for (ring::Residue d : divisors)
        pairs.emplace_back(d.value(), ring::zero_divisor_partner(d)->value());

    std::ostringstream payload;
    switch (format) {
        case Format::Text:
            payload << "modulus=" << modulus_value << '\n';
            payload << "is_field=" << (field ? "true" : "false") << '\n';
            payload << "zero_divisors=";
            if (field)
                payload << "none";
            else
                payload << join(pairs, ",", [](const auto& p) {
                    return std::to_string(p.first) + ":" + std::to_string(p.second);
                });
            payload << '\n';
            break;
        case Format::Csv:
            payload << "zero_divisor,partner" << '\n';
            for (const auto& [value, partner] : pairs)
                payload << value << ',' << partner << '\n';
            break;
        case Format::Json: {
            ordered_json list = ordered_json::array();
            for (const auto& [value, partner] : pairs)
                list.push_back({{"value", value}, {"partner", partner}});
            print_wrapped(payload, "analyze",
                          ordered_json{{"target", "zero-divisors"},
                                       {"modulus", modulus_value}},
                          ordered_json{{"modulus", modulus_value},
                                       {"is_field", field},
                                       {"zero_divisors", std::move(list)}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

int analyze_patterns(Format format, std::ostream& out) {
    const std::vector<modes::Pattern> patterns = modes::enumerate_patterns();
    const auto name_of = [](const modes::Pattern& p) -> std::string {
        for (modes::Kind k : modes::kAllKinds)
            if (modes::pattern_of(k) == p) return modes::kind_name(k);
        return "unnamed";
    };

    std::ostringstream payload;
    switch (format) {
        case Format::Text:
            for (const auto& p : patterns)
                payload << join_numbers(p.steps(), "+") << ' ' << name_of(p) << '\n';
            break;
        case Format::Csv:
            payload << "first,second,third,kind" << '\n';
            for (const auto& p : patterns)
                payload << p.step(0) << ',' << p.step(1) << ',' << p.step(2) << ','
                        << name_of(p) << '\n';
            break;
        case Format::Json: {
            ordered_json list = ordered_json::array();
            for (const auto& p : patterns)
                list.push_back({{"steps", p.steps()}, {"kind", name_of(p)}});
            print_wrapped(payload, "analyze", ordered_json{{"target", "patterns"}},
                          ordered_json{{"patterns", std::move(list)}});
            break;
        }
    }
    out << payload.str();
    return kOk;
}

// verify ---------------------------------------------------------------

struct VerifyRequest {
    std::string identity;
    std::optional<std::pair<std::int64_t, std::int64_t>> range;
    std::optional<modes::Kind> kind;
};

std::pair<std::int64_t, std::int64_t> default_range(const std::string& identity) {
    if (identity == "recurrence") return {0, 9999};
    if (identity == "f3" || identity == "f5") return {0, 1000};
    if (identity == "f4" || identity == "combined") return {0, 5};
    if (identity == "retrograde") return {0, 11};
    if (identity == "f9") return {0, 300};
    throw UsageError("unknown identity '" + identity + "'");
}

report::Identity identity_from_token(const std::string& token) {
    using report::Identity;
    if (token == "recurrence") return Identity::RecurrenceAgreement;
    if (token == "f3") return Identity::FullRowShift;
    if (token == "f4") return Identity::PrefixReversal;
    if (token == "f5") return Identity::HalfRowShift;
    if (token == "combined") return Identity::ReversalShiftLink;
    if (token == "retrograde") return Identity::RetrogradeCoincidence;
    throw UsageError("unknown identity '" + token + "'");
}

std::vector<report::IdentityReport> collect_reports(const VerifyRequest& request) {
    std::vector<report::IdentityReport> reports;
    const auto run_series = [&](const std::string& token) {
        const auto [lo, hi] = request.range.value_or(default_range(token));
        try {
            reports.push_back(series::verify_identity(identity_from_token(token), lo, hi));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    };
    const auto run_modes = [&](std::int64_t lo, std::int64_t hi) {
        std::vector<modes::Kind> kinds;
        if (request.kind)
            kinds.push_back(*request.kind);
        else
            kinds.assign(modes::kAllKinds.begin(), modes::kAllKinds.end());
        for (modes::Kind k : kinds) {
            try {
                reports.push_back(modes::verify_quart_shift(k, lo, hi));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    };

    if (request.identity == "all") {
        if (request.range) throw UsageError("'all' runs each identity over its own range");
        for (const char* token : {"recurrence", "f3", "f4", "f5", "combined", "retrograde"})
            run_series(token);
        const auto [lo, hi] = default_range("f9");
        run_modes(lo, hi);
    } else if (request.identity == "f9") {
        const auto [lo, hi] = request.range.value_or(default_range("f9"));
        run_modes(lo, hi);
    } else {
        run_series(request.identity);
    }
    return reports;
}

int cmd_verify(const VerifyRequest& request, Format format, std::ostream& out) {
    if (request.kind && request.identity != "f9")
        throw UsageError("--kind applies only to f9");
    const std::vector<report::IdentityReport> reports = collect_reports(request);
    const bool all_hold =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });

    std::ostringstream payload;
    switch (format) {
        case Format::Text:
            for (const auto& r : reports) {
                payload << report::identity_name(r.id) << ' ' << r.subject << " [" << r.lo
                        << ".." << r.hi << "] " << (r.holds ? "holds" : "FAILS");
                if (r.transposition_level) payload << " level=" << *r.transposition_level;
                payload << '\n';
                for (const auto& c : r.counterexamples)
                    payload << "  n=" << c.n << " lhs=" << c.lhs << " rhs=" << c.rhs << '\n';
            }
            break;
        case Format::Csv:
            payload << "identity,subject,lo,hi,holds" << '\n';
            for (const auto& r : reports)
                payload << report::identity_name(r.id) << ',' << r.subject << ',' << r.lo
                        << ',' << r.hi << ',' << (r.holds ? "true" : "false") << '\n';
            break;
        case Format::Json: {
            ordered_json params{{"identity", request.identity}};
            if (request.range)
                params["range"] = {{"lo", request.range->first},
                                   {"hi", request.range->second}};
            if (request.kind) params["kind"] = modes::kind_name(*request.kind);
            ordered_json list = ordered_json::array();
            for (const auto& r : reports) {
                ordered_json entry{{"identity", report::identity_name(r.id)},
                                   {"subject", r.subject},
                                   {"lo", r.lo},
                                   {"hi", r.hi},
                                   {"holds", r.holds}};
                entry["counterexamples"] = ordered_json::array();
                for (const auto& c : r.counterexamples)
                    entry["counterexamples"].push_back(
                        {{"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs}});
                if (r.transposition_level)
                    entry["transposition_level"] = *r.transposition_level;
                if (!r.detail.empty()) entry["detail"] = r.detail;
                list.push_back(std::move(entry));
            }
            print_wrapped(payload, "verify", std::move(params),
                          ordered_json{{"reports", std::move(list)},
                                       {"all_hold", all_hold}});
            break;
        }
    }
    out << payload.str();
    return all_hold ? kOk : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"all-interval tone-semitone series and quart-mode toolkit"};
    app.name("tss");
    app.require_subcommand(1);

    auto* series_cmd = app.add_subcommand("series", "generate the tone-semitone series");
    std::string series_form = "prime";
    int series_count = 12;
    bool series_one_based = false;
    std::string series_format = "text";
    series_cmd->add_option("--form", series_form, "prime or inversion");
    series_cmd->add_option("--count", series_count, "number of sounds");
    series_cmd->add_flag("--one-based", series_one_based, "display 1-based indices");
    series_cmd->add_option("--format", series_format, "text, json, or csv");

    auto* transform_cmd = app.add_subcommand("transform", "apply row operators");
    std::string transform_row;
    int transform_mod = 12;
    std::string transform_ops;
    std::string transform_format = "text";
    transform_cmd->add_option("--row", transform_row, "comma-separated pitches")->required();
    transform_cmd->add_option("--mod", transform_mod, "modulus");
    transform_cmd->add_option("--ops", transform_ops, "comma-separated T<k>, I, R")
        ->required();
    transform_cmd->add_option("--format", transform_format, "text, json, or csv");

    auto* modes_cmd = app.add_subcommand("modes", "generate a continued quart mode");
    std::string modes_kind;
    int modes_count = 12;
    bool modes_one_based = false;
    std::string modes_format = "text";
    modes_cmd->add_option("--kind", modes_kind, "large, small, reduced, sg-113, sg-131, sg-311")
        ->required();
    modes_cmd->add_option("--count", modes_count, "number of sounds");
    modes_cmd->add_flag("--one-based", modes_one_based, "display 1-based indices");
    modes_cmd->add_option("--format", modes_format, "text, json, or csv");

    auto* analyze_cmd = app.add_subcommand("analyze", "report structural facts");
    std::string analyze_target;
    std::string analyze_form = "prime";
    int analyze_mod = 12;
    std::string analyze_series = "atss";
    std::string analyze_format = "text";
    analyze_cmd
        ->add_option("target", analyze_target,
                     "coverage, reiterations, period, zero-divisors, or patterns")
        ->required();
    analyze_cmd->add_option("--form", analyze_form, "prime or inversion (coverage)");
    analyze_cmd->add_option("--mod", analyze_mod, "modulus (zero-divisors)");
    analyze_cmd->add_option("--series", analyze_series, "atss or a mode kind (period)");
    analyze_cmd->add_option("--format", analyze_format, "text, json, or csv");

    auto* verify_cmd = app.add_subcommand("verify", "check the identity catalogue");
    std::string verify_identity;
    std::string verify_range;
    std::string verify_kind;
    std::string verify_format = "text";
    verify_cmd
        ->add_option("identity", verify_identity,
                     "recurrence, f3, f4, f5, combined, retrograde, f9, or all")
        ->required();
    verify_cmd->add_option("--range", verify_range, "inclusive range A..B");
    verify_cmd->add_option("--kind", verify_kind, "restrict f9 to one mode kind");
    verify_cmd->add_option("--format", verify_format, "text, json, or csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (app.got_subcommand(series_cmd))
            return cmd_series(series_form, series_count, series_one_based,
                              format_from_name(series_format), out, err);
        if (app.got_subcommand(transform_cmd))
            return cmd_transform(transform_row, transform_mod, transform_ops,
                                 format_from_name(transform_format), out);
        if (app.got_subcommand(modes_cmd))
            return cmd_modes(modes_kind, modes_count, modes_one_based,
                             format_from_name(modes_format), out);
        if (app.got_subcommand(analyze_cmd)) {
            const Format format = format_from_name(analyze_format);
            if (analyze_target == "coverage")
                return analyze_coverage(analyze_form, format, out);
            if (analyze_target == "reiterations") return analyze_reiterations(format, out);
            if (analyze_target == "period") return analyze_period(analyze_series, format, out);
            if (analyze_target == "zero-divisors")
                return analyze_zero_divisors(analyze_mod, format, out);
            if (analyze_target == "patterns") return analyze_patterns(format, out);
            throw UsageError("unknown analyze target '" + analyze_target + "'");
        }
        if (app.got_subcommand(verify_cmd)) {
            VerifyRequest request;
            request.identity = verify_identity;
            if (!verify_range.empty()) request.range = parse_range(verify_range);
            if (!verify_kind.empty()) {
                const auto kind = modes::kind_from_name(verify_kind);
                if (!kind) throw UsageError("unknown mode kind '" + verify_kind + "'");
                request.kind = kind;
            }
            return cmd_verify(request, format_from_name(verify_format), out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    err << "error: no subcommand given" << '\n';
    return kUsageError;
}

}  // namespace tss::cli
