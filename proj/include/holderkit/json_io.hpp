#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "holderkit/bounds.hpp"
#include "holderkit/errors.hpp"
#include "holderkit/family.hpp"
#include "holderkit/search.hpp"

namespace holderkit {

// ============================================================================
// Canonical JSON / CSV serialization
// ============================================================================
//
// Payloads are byte-reproducible: fixed field order, compact separators, and
// numbers formatted with 17 significant digits ("%.17g"), which round-trips
// IEEE doubles exactly. std::to_chars keeps the formatting locale-free.

inline std::string format_number(double x) {
    if (!std::isfinite(x)) {
        throw invariant_error("format_number: non-finite value cannot be serialized");
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string format_number(std::int64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_number(std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline void json_escape_into(std::string& out, std::string_view s) {
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
}

/// Streaming writer for compact JSON with caller-controlled field order.
class JsonWriter {
public:
    JsonWriter& begin_object() { element_prefix(); out_ += '{'; first_.push_back(true); return *this; }
    JsonWriter& end_object() { out_ += '}'; first_.pop_back(); return *this; }
    JsonWriter& begin_array() { element_prefix(); out_ += '['; first_.push_back(true); return *this; }
    JsonWriter& end_array() { out_ += ']'; first_.pop_back(); return *this; }

    JsonWriter& key(std::string_view k) {
        element_prefix();
        out_ += '"';
        json_escape_into(out_, k);
        out_ += "\":";
        after_key_ = true;
        return *this;
    }

    JsonWriter& number(double x) { element_prefix(); out_ += format_number(x); return *this; }
    JsonWriter& number(std::int64_t v) { element_prefix(); out_ += format_number(v); return *this; }
    JsonWriter& number(std::uint64_t v) { element_prefix(); out_ += format_number(v); return *this; }
    JsonWriter& boolean(bool b) { element_prefix(); out_ += b ? "true" : "false"; return *this; }
    JsonWriter& null() { element_prefix(); out_ += "null"; return *this; }

    JsonWriter& string(std::string_view s) {
        element_prefix();
        out_ += '"';
        json_escape_into(out_, s);
        out_ += '"';
        return *this;
    }

    JsonWriter& numbers(const std::vector<double>& xs) {
        begin_array();
        for (const double x : xs) number(x);
        end_array();
        return *this;
    }

    const std::string& str() const noexcept { return out_; }

private:
    void element_prefix() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (!first_.empty()) {
            if (!first_.back()) out_ += ',';
            first_.back() = false;
        }
    }

    std::string out_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

// ---------------------------------------------------------------------------
// Typed report payloads
// ---------------------------------------------------------------------------

inline void write_fields(JsonWriter& w, const BoundReport& r) {
    w.key("mu_fg").number(r.mu_fg);
    w.key("holder").number(r.holder);
    w.key("b_p").number(r.b_p);
    w.key("b_q").number(r.b_q);
    w.key("symmetrized").number(r.symmetrized);
    w.key("improves_holder").boolean(r.improves_holder);
    w.key("violates_holder_order").boolean(r.violates_holder_order);
}

inline void write_fields(JsonWriter& w, const CsIdentityReport& r) {
    w.key("lhs").number(r.lhs);
    w.key("rhs_main").number(r.rhs_main);
    w.key("improvement").number(r.improvement);
    w.key("residual").number(r.residual);
    w.key("eps_bound").number(r.eps_bound);
}

inline void write_fields(JsonWriter& w, const GapPoint& g) {
    w.key("t").number(g.t);
    w.key("d1").number(g.d1);
    w.key("d2").number(g.d2);
    w.key("min_gap").number(g.min_gap);
}

inline std::string to_json(const BoundReport& r) {
    JsonWriter w;
    w.begin_object();
    write_fields(w, r);
    w.end_object();
    return w.str();
}

inline std::string to_json(const CsIdentityReport& r) {
    JsonWriter w;
    w.begin_object();
    write_fields(w, r);
    w.end_object();
    return w.str();
}

inline std::string to_json(const GapPoint& g) {
    JsonWriter w;
    w.begin_object();
    write_fields(w, g);
    w.end_object();
    return w.str();
}

inline std::string to_json(const ViolationScan& s) {
    JsonWriter w;
    w.begin_object();
    w.key("found").boolean(s.found);
    w.key("t").number(s.t);
    w.key("d1").number(s.d1);
    w.key("d2").number(s.d2);
    w.key("min_gap").number(s.min_gap);
    w.key("tolerance").number(s.tolerance);
    w.key("max_min_gap").number(s.max_min_gap);
    w.key("t_at_max").number(s.t_at_max);
    w.key("steps").number(static_cast<std::int64_t>(s.steps));
    w.key("t_max").number(s.t_max);
    w.end_object();
    return w.str();
}

inline std::string to_json(const SearchResult& r, const SearchConfig& cfg) {
    JsonWriter w;
    w.begin_object();
    w.key("p").number(cfg.p);
    w.key("atoms").number(static_cast<std::int64_t>(cfg.atoms));
    w.key("trials").number(static_cast<std::int64_t>(cfg.trials));
    w.key("seed").number(cfg.seed);
    w.key("violations_found").number(r.violations_found);
    w.key("best_gap").number(r.best_gap);
    w.key("best_trial").number(r.best_trial);
    w.key("best_instance").begin_object();
    w.key("weights").numbers(r.best_instance.weights);
    w.key("f").numbers(r.best_instance.f);
    w.key("g").numbers(r.best_instance.g);
    w.end_object();
    w.end_object();
    return w.str();
}

/// CSV for the gap curves: header "t,d1,d2,min_gap", one row per grid point,
/// 17-significant-digit decimals, every line newline-terminated.
inline std::string to_csv(const std::vector<GapPoint>& points) {
    std::string out = "t,d1,d2,min_gap\n";
    for (const GapPoint& g : points) {
        out += format_number(g.t);
        out += ',';
        out += format_number(g.d1);
        out += ',';
        out += format_number(g.d2);
        out += ',';
        out += format_number(g.min_gap);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instance input
// ---------------------------------------------------------------------------

struct InstanceData {
    std::vector<double> weights;
    std::vector<double> f;
    std::vector<double> g;
};

namespace detail {

inline std::vector<double> read_number_array(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw usage_error(std::string("instance JSON: missing key \"") + key + "\"");
    }
    const nlohmann::json& node = doc.at(key);
    if (!node.is_array() || node.empty()) {
        throw usage_error(std::string("instance JSON: key \"") + key +
                          "\" must be a non-empty array of numbers");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_number()) {
            throw usage_error(std::string("instance JSON: key \"") + key + "\" entry #" +
                              std::to_string(i) + " is not a number");
        }
        out.push_back(node[i].get<double>());
    }
    return out;
}

}  // namespace detail

/// Parses {"weights": [...], "f": [...], "g": [...]}: equal-length arrays of
/// finite numbers, weights strictly positive, values nonnegative. Rejections
/// name the offending key.
inline InstanceData parse_instance_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw usage_error(std::string("instance JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw usage_error("instance JSON: top level must be an object");
    }
    InstanceData inst;
    inst.weights = detail::read_number_array(doc, "weights");
    inst.f = detail::read_number_array(doc, "f");
    inst.g = detail::read_number_array(doc, "g");
    if (inst.f.size() != inst.weights.size() || inst.g.size() != inst.weights.size()) {
        throw usage_error("instance JSON: keys \"weights\", \"f\", \"g\" must have equal lengths");
    }
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
        if (!std::isfinite(inst.weights[i]) || inst.weights[i] <= 0.0) {
            throw usage_error("instance JSON: key \"weights\" entry #" + std::to_string(i) +
                              " must be strictly positive and finite");
        }
    }
    for (const char* key : {"f", "g"}) {
        const std::vector<double>& vals = key[0] == 'f' ? inst.f : inst.g;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (!std::isfinite(vals[i]) || vals[i] < 0.0) {
                throw usage_error(std::string("instance JSON: key \"") + key + "\" entry #" +
                                  std::to_string(i) + " must be finite and >= 0");
            }
        }
    }
    return inst;
}

/// Re-serializes a parsed document in the canonical form used by every
/// payload here (insertion order preserved, numbers reformatted). A payload
/// is canonical exactly when this function reproduces its bytes.
inline std::string canonical_json(const nlohmann::ordered_json& j) {
    std::string out;
    const auto emit = [&out](const nlohmann::ordered_json& node, const auto& self) -> void {
        switch (node.type()) {
            case nlohmann::ordered_json::value_t::object: {
                out += '{';
                bool first = true;
                for (auto it = node.begin(); it != node.end(); ++it) {
                    if (!first) out += ',';
                    first = false;
                    out += '"';
                    json_escape_into(out, it.key());
                    out += "\":";
                    self(it.value(), self);
                }
                out += '}';
                break;
            }
            case nlohmann::ordered_json::value_t::array: {
                out += '[';
                bool first = true;
                for (const auto& item : node) {
                    if (!first) out += ',';
                    first = false;
                    self(item, self);
                }
                out += ']';
                break;
            }
            case nlohmann::ordered_json::value_t::string:
                out += '"';
                json_escape_into(out, node.get_ref<const std::string&>());
                out += '"';
                break;
            case nlohmann::ordered_json::value_t::boolean:
                out += node.get<bool>() ? "true" : "false";
                break;
            case nlohmann::ordered_json::value_t::number_integer:
                out += format_number(static_cast<std::int64_t>(node.get<std::int64_t>()));
                break;
            case nlohmann::ordered_json::value_t::number_unsigned:
                out += format_number(static_cast<std::uint64_t>(node.get<std::uint64_t>()));
                break;
            case nlohmann::ordered_json::value_t::number_float:
                out += format_number(node.get<double>());
                break;
            default:
                out += "null";
        }
    };
    emit(j, emit);
    return out;
}

}  // namespace holderkit
