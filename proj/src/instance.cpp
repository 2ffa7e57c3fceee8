#include "twoway/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace twoway {

using nlohmann::json;

std::string_view to_string(Variant variant) {
    return variant == Variant::Full ? "full" : "successful";
}

Variant parse_variant(std::string_view text) {
    if (text == "full") return Variant::Full;
    if (text == "successful") return Variant::Successful;
    throw InstanceError("unknown variant '" + std::string(text) + "'");
}

Instance::Instance(Variant variant, std::vector<Rational> keys, std::vector<Rational> beta,
                   std::vector<Rational> alpha)
    : variant_(variant), keys_(std::move(keys)), beta_(std::move(beta)), alpha_(std::move(alpha)) {
    for (auto* v : {&keys_, &beta_, &alpha_})
        for (auto& x : *v) x.canonicalize();
    const std::size_t n = keys_.size();
    if (beta_.size() != n)
        throw InstanceError("length mismatch: " + std::to_string(n) + " keys but " +
                            std::to_string(beta_.size()) + " beta weights");
    if (variant_ == Variant::Full) {
        if (alpha_.size() != n + 1)
            throw InstanceError("length mismatch: " + std::to_string(n) + " keys need " +
                                std::to_string(n + 1) + " alpha weights, got " +
                                std::to_string(alpha_.size()));
    } else {
        if (!alpha_.empty()) throw InstanceError("successful-variant instance must not carry alpha weights");
        if (n == 0) throw InstanceError("successful-variant instance needs at least one key");
        alpha_.assign(n + 1, Rational(0));
    }
    for (std::size_t b = 1; b < n; ++b)
        if (!(keys_[b - 1] < keys_[b])) throw InstanceError("keys not strictly increasing");
    for (const auto& w : beta_)
        if (w < 0) throw InstanceError("negative weight " + format_rational(w));
    for (const auto& w : alpha_)
        if (w < 0) throw InstanceError("negative weight " + format_rational(w));
}

Instance Instance::as_variant(Variant variant) const {
    if (variant == variant_) return *this;
    if (variant == Variant::Successful) return successful(keys_, beta_);
    return full(keys_, beta_, std::vector<Rational>(keys_.size() + 1, Rational(0)));
}

Instance Instance::scaled(const Rational& factor) const {
    if (factor <= 0) throw InstanceError("scale factor must be positive");
    Rational f = factor;
    f.canonicalize();
    Instance out = *this;
    for (auto& w : out.beta_) w *= f;
    for (auto& w : out.alpha_) w *= f;
    return out;
}

RankPermutation::RankPermutation(const Instance& inst) {
    const int n = inst.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inst.key_weight(a) < inst.key_weight(b); });
    key_of_rank_.assign(static_cast<std::size_t>(n) + 1, 0);
    rank_of_key_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) {
        key_of_rank_[static_cast<std::size_t>(r)] = order[static_cast<std::size_t>(r - 1)];
        rank_of_key_[static_cast<std::size_t>(order[static_cast<std::size_t>(r - 1)])] = r;
    }
}

Weight total_weight(const Instance& inst) {
    Rational sum = 0;
    for (const auto& w : inst.beta()) sum += w;
    if (inst.variant() == Variant::Full)
        for (const auto& w : inst.alpha()) sum += w;
    return Weight(sum);
}

namespace {

Rational number_from_json(const json& value, std::string_view field) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer() || value.is_number_unsigned()) return parse_rational(value.dump());
        // dump() yields the shortest text that round-trips the double, which
        // recovers the literal for ordinary decimal inputs such as 0.08.
        if (value.is_number_float()) return parse_rational(value.dump());
    } catch (const std::invalid_argument& e) {
        throw InstanceError(std::string(field) + ": " + e.what());
    }
    throw InstanceError(std::string(field) + ": expected a number or numeric string");
}

std::vector<Rational> numbers_from_json(const json& doc, const char* field) {
    const auto& arr = doc.at(field);
    if (!arr.is_array()) throw InstanceError(std::string("field '") + field + "' must be an array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(number_from_json(v, field));
    return out;
}

} // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("malformed instance document: ") + e.what());
    }
    if (!doc.is_object()) throw InstanceError("malformed instance document: expected an object");

    for (const auto& [name, _] : doc.items())
        if (name != "variant" && name != "keys" && name != "beta" && name != "alpha")
            throw InstanceError("unknown field '" + name + "'");

    Variant variant = Variant::Full;
    if (doc.contains("variant")) {
        if (!doc["variant"].is_string()) throw InstanceError("field 'variant' must be a string");
        variant = parse_variant(doc["variant"].get<std::string>());
    }
    if (!doc.contains("keys")) throw InstanceError("missing field 'keys'");
    if (!doc.contains("beta")) throw InstanceError("missing field 'beta'");

    auto keys = numbers_from_json(doc, "keys");
    auto beta = numbers_from_json(doc, "beta");
    std::vector<Rational> alpha;
    if (variant == Variant::Full) {
        if (!doc.contains("alpha")) throw InstanceError("missing field 'alpha' for full variant");
        alpha = numbers_from_json(doc, "alpha");
    } else if (doc.contains("alpha")) {
        throw InstanceError("field 'alpha' is not allowed in a successful-variant instance");
    }
    return Instance(variant, std::move(keys), std::move(beta), std::move(alpha));
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    auto strings = [](const std::vector<Rational>& values) {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(format_rational(v));
        return arr;
    };
    json doc;
    doc["variant"] = std::string(to_string(inst.variant()));
    doc["keys"] = strings(inst.keys());
    doc["beta"] = strings(inst.beta());
    if (inst.variant() == Variant::Full) doc["alpha"] = strings(inst.alpha());
    return doc.dump(2) + "\n";
}

} // namespace twoway
