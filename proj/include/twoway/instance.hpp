#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twoway/weight.hpp"

namespace twoway {

/// Full: queries may be any value, so intervals carry weight too.
/// Successful: queries are always keys.
enum class Variant { Full, Successful };

std::string_view to_string(Variant variant);
Variant parse_variant(std::string_view text);

class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A static search problem: n sorted keys with weights, and (full variant)
/// the n + 1 open intervals around them.
///
/// Indexing follows the usual convention for this problem: keys are
/// 1-based (k_1 .. k_n), intervals are 0-based, and interval a is
/// (k_a, k_{a+1}) with k_0 = -inf and k_{n+1} = +inf. Weights are always
/// held exactly; solvers convert to double on request.
class Instance {
public:
    Instance() = default;

    /// Validates and builds. For the successful variant `alpha` must be
    /// empty; it is stored as n + 1 zeros.
    Instance(Variant variant, std::vector<Rational> keys, std::vector<Rational> beta,
             std::vector<Rational> alpha = {});

    static Instance full(std::vector<Rational> keys, std::vector<Rational> beta,
                         std::vector<Rational> alpha) {
        return Instance(Variant::Full, std::move(keys), std::move(beta), std::move(alpha));
    }
    static Instance successful(std::vector<Rational> keys, std::vector<Rational> beta) {
        return Instance(Variant::Successful, std::move(keys), std::move(beta));
    }

    Variant variant() const { return variant_; }
    int size() const { return static_cast<int>(keys_.size()); }

    const Rational& key(int b) const { return keys_.at(static_cast<std::size_t>(b - 1)); }
    const Rational& key_weight(int b) const { return beta_.at(static_cast<std::size_t>(b - 1)); }
    const Rational& gap_weight(int a) const { return alpha_.at(static_cast<std::size_t>(a)); }

    const std::vector<Rational>& keys() const { return keys_; }
    const std::vector<Rational>& beta() const { return beta_; }
    const std::vector<Rational>& alpha() const { return alpha_; }

    bool valid_key(int b) const { return b >= 1 && b <= size(); }
    bool valid_gap(int a) const { return a >= 0 && a <= size(); }

    /// Same keys and key weights in the other variant. Converting to full
    /// gives every interval weight zero.
    Instance as_variant(Variant variant) const;

    /// Every weight multiplied by `factor` (> 0).
    Instance scaled(const Rational& factor) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Variant variant_ = Variant::Full;
    std::vector<Rational> keys_;
    std::vector<Rational> beta_;
    std::vector<Rational> alpha_{Rational(0)};
};

/// Orders keys by nondecreasing weight; equal weights are ranked by
/// ascending key index, so among ties the largest index gets the largest
/// rank. Ranks and key indices are both 1-based.
class RankPermutation {
public:
    explicit RankPermutation(const Instance& inst);

    int size() const { return static_cast<int>(key_of_rank_.size()) - 1; }
    /// pi(r): the key index holding rank r.
    int key_at(int rank) const { return key_of_rank_.at(static_cast<std::size_t>(rank)); }
    int rank_of(int key) const { return rank_of_key_.at(static_cast<std::size_t>(key)); }

    friend bool operator==(const RankPermutation&, const RankPermutation&) = default;

private:
    std::vector<int> key_of_rank_;
    std::vector<int> rank_of_key_;
};

inline RankPermutation rank_permutation(const Instance& inst) { return RankPermutation(inst); }

Weight total_weight(const Instance& inst);

/// JSON instance document:
///   {"variant": "full", "keys": [1, 3], "beta": ["0.1", "0.2"], "alpha": ["0", "0.3", "0.4"]}
/// Numbers may be JSON numbers or strings ("0.08", "7/2"); strings are
/// read exactly. Throws InstanceError on malformed or invalid documents.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

/// Writes every number as an exact string so parsing the output gives back
/// an identical Instance.
std::string serialize_instance(const Instance& inst);

} // namespace twoway
