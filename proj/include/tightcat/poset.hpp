#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tightcat/config.hpp"
#include "tightcat/fincat.hpp"

namespace tightcat {

using Subset = boost::dynamic_bitset<>;

class FinPoset {
public:
    // leq must be a partial order; throws TypeMismatch otherwise.
    FinPoset(std::vector<std::string> elements, std::vector<std::vector<char>> leq);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(int i) const { return elements_[i]; }
    bool leq(int i, int j) const { return leq_[i][j] != 0; }
    int index(const std::string& name) const;
    Subset empty_set() const { return Subset(elements_.size()); }
    Subset full_set() const { return Subset(elements_.size()).set(); }
    Subset subset(const std::vector<std::string>& names) const;

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<char>> leq_;
};

// Builds the reflexive-transitive closure of the given pairs.
FinPoset make_poset(const std::vector<std::string>& elements,
                    const std::vector<std::pair<std::string, std::string>>& leq);
FinPoset chain_poset(int n);
FinPoset antichain_poset(int n);
FinPoset powerset_lattice(int n);
FinPoset opposite(const FinPoset& p);

Subset lower_closure(const FinPoset& p, const Subset& s);
Subset upper_closure(const FinPoset& p, const Subset& s);
Subset upper_bounds(const FinPoset& p, const Subset& s);
Subset lower_bounds(const FinPoset& p, const Subset& s);
Subset principal_down(const FinPoset& p, int x);
Subset principal_up(const FinPoset& p, int x);

struct PosetCut {
    Subset lower, upper;
    bool operator==(const PosetCut& o) const { return lower == o.lower; }
    bool operator!=(const PosetCut& o) const { return lower != o.lower; }
};
// Canonical order: by size of the lower set, then lexicographically.
bool cut_before(const PosetCut& a, const PosetCut& b);

struct DMCompletion {
    std::vector<PosetCut> cuts;   // canonical order
    std::vector<int> embed;       // element -> index of its principal cut
    FinPoset lattice;             // cuts ordered by inclusion of lower sets
};
DMCompletion dm_completion(const FinPoset& p);

PosetCut cut_join(const FinPoset& p, const std::vector<PosetCut>& cuts);
PosetCut cut_meet(const FinPoset& p, const std::vector<PosetCut>& cuts);

// Powerset scan, independent of dm_completion. Throws SizeLimit when 2^n
// exceeds the cap.
std::vector<PosetCut> oracle_dm(const FinPoset& p, const Options& opt = {});
std::vector<PosetCut> oracle_dm_serial(const FinPoset& p, const Options& opt = {});

std::optional<int> join(const FinPoset& p, int x, int y);
std::optional<int> meet(const FinPoset& p, int x, int y);
bool is_complete_lattice(const FinPoset& p);
std::optional<std::vector<int>> order_isomorphism(const FinPoset& p, const FinPoset& q);
FinPoset cut_poset(const FinPoset& p, const std::vector<PosetCut>& cuts);

// One morphism "x<=y" per related pair; identities are id_x.
CatPtr thin_category(const FinPoset& p);

// Every poset on at most n elements, one per isomorphism class.
std::vector<FinPoset> all_posets_up_to_iso(int max_n);
FinPoset random_poset(int n, double density, std::mt19937& rng);
// The corpus used by the order-theoretic acceptance criteria.
std::vector<FinPoset> poset_corpus(std::uint32_t seed, int random_count = 200, int max_random_n = 7);
std::string describe(const FinPoset& p, const Subset& s);

}  // namespace tightcat
