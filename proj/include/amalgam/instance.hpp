#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/amalgam_ring.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Self-test hook: overwrite one table entry of a constructed ring, after
/// validation. Suites must then report the instance falsified.
struct Corruption {
    std::string ring;   // "A" or "B"
    std::string table;  // "add" or "mul"
    Elem row = 0, col = 0, value = 0;
};

/// A parsed instance description (format 1). Ring constructors are kept as
/// their canonical JSON trees; `serialize` is the exact inverse of
/// `parse_instance`. Everything is deterministic; there are no seeds.
struct InstanceSpec {
    std::string kind;  // finite | semigroup | scaled-semigroup | series-witness
    std::string label;

    // finite
    nlohmann::json a_tree;
    nlohmann::json b_tree;
    nlohmann::json f_spec;  // {"map":[...]} or {"images":[[a,b],...]}
    std::vector<Elem> j_gens;
    std::optional<Corruption> corrupt;

    // semigroup / scaled-semigroup
    std::vector<unsigned> s_gens;
    std::vector<unsigned> e_gens;
    std::vector<unsigned> t_gens;
    unsigned d = 1;

    // series-witness
    unsigned p = 0;
    unsigned prec = 0;

    std::vector<std::string> suites;  // empty = every applicable suite
};

/// Parses one instance document. Syntax errors carry line/column; semantic
/// errors name the offending field and witness.
InstanceSpec parse_instance(const std::string& text);

/// Parses a file that holds either one instance object or an array of them.
std::vector<InstanceSpec> parse_instances(const std::string& text);

/// Canonical serialization; parse_instance(serialize(s)) == s.
std::string serialize(const InstanceSpec& spec);
nlohmann::json to_json(const InstanceSpec& spec);
InstanceSpec instance_from_json(const nlohmann::json& j, const std::string& where);

/// Builds rings from constructor trees, memoizing on the canonical tree text
/// so repeated instances share validated carriers.
class RingBuilder {
  public:
    explicit RingBuilder(std::size_t cap = kDefaultCap) : cap_(cap) {}
    RingPtr build(const nlohmann::json& tree);
    std::size_t cap() const { return cap_; }

  private:
    std::size_t cap_;
    std::map<std::string, RingPtr> cache_;
};

/// Compiles an f-specification to a validated hom. Generator-image syntax is
/// propagated through the ring operations to a full map first; a conflict or
/// an underdetermined map is a semantic error naming the witness.
RingHom compile_hom(const RingPtr& source, const RingPtr& target,
                    const nlohmann::json& f_spec);

/// Kernel objects for one finite instance.
struct FiniteContext {
    RingPtr A;
    RingPtr B;
    RingHom f;
    IdealSet J;
    AmalgamRing D;
};

/// Builds the kernel objects. Corruption (when present) is applied after the
/// clean rings are built, so downstream checks see the mutated tables.
FiniteContext build_finite_context(const InstanceSpec& spec, RingBuilder& builder);

}  // namespace amalgam
