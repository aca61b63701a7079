#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Genome data model, text format, integer wire format, checksum and
// structural validation. Everything here is a pure value type.

namespace dnanet {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Wire constants. The encoded form is a flat list of 32-bit codons:
//   7001, 1,
//   100,  10, protocol, type, age, twin_flag,
//         20, gene_count, {gene_code, scope, cond_count, {key,val}*}*,
//         30, n, node_id*,
//         31, m, agent_id*,
//   200,  40, rule_count, {cond_count, {key,val}*, child_type}*,
//         20, template_count, {gene...}*,
//   checksum
inline constexpr u32 kMagicCodon = 7001;
inline constexpr u32 kDnaVersion = 1;
inline constexpr u32 kTagMain = 100;
inline constexpr u32 kTagHeader = 10;
inline constexpr u32 kTagGenes = 20;
inline constexpr u32 kTagNeighborLinks = 30;
inline constexpr u32 kTagChildLinks = 31;
inline constexpr u32 kTagRepro = 200;
inline constexpr u32 kTagChildRules = 40;

enum class GeneScope : u32 { Inner = 0, Outer = 1, Any = 2 };
enum class TwinFlag : u32 { PrimaryEnabled = 0, TwinEnabled = 1 };

const char* to_string(GeneScope s);
const char* to_string(TwinFlag f);

// One (key, value) attribute pair, string form. Wire form uses dictionary codes.
using AttrPair = std::pair<std::string, std::string>;

struct GeneSpec {
    u32 gene_code = 0;
    GeneScope scope = GeneScope::Any;
    std::vector<AttrPair> conditions;  // conjunction; empty = unconditional

    bool operator==(const GeneSpec&) const = default;
};

struct ChildRule {
    std::vector<AttrPair> conditions;  // empty = default rule
    u32 child_type = 0;

    bool is_default() const { return conditions.empty(); }
    bool operator==(const ChildRule&) const = default;
};

struct MainStrand {
    u32 protocol_code = 1;
    u32 type_code = 0;
    u32 age = 0;
    TwinFlag twin_flag = TwinFlag::PrimaryEnabled;
    std::vector<GeneSpec> genes;
    std::vector<u32> neighbor_links;  // node ids, dynamic
    std::vector<u32> child_links;     // agent ids, dynamic

    bool operator==(const MainStrand&) const = default;
};

struct ReproStrand {
    std::vector<ChildRule> child_type_rules;  // first match wins; last is default
    std::vector<GeneSpec> gene_template;

    bool operator==(const ReproStrand&) const = default;
};

struct Genome {
    MainStrand main;
    ReproStrand repro;

    bool operator==(const Genome&) const = default;
};

struct CodonSeq {
    std::vector<u32> codons;

    bool operator==(const CodonSeq&) const = default;
    std::size_t size() const { return codons.size(); }
};

// Bijective string <-> code dictionary for attribute keys and values.
// Codes start at 1 and follow interning order.
class AttrDict {
public:
    u32 intern(const std::string& s);
    std::optional<u32> code_of(const std::string& s) const;
    std::optional<std::string> string_of(u32 code) const;
    std::size_t size() const { return strings_.size(); }

    // Interns every attribute string appearing in the genome, in document order.
    void intern_genome(const Genome& g);

private:
    std::vector<std::string> strings_;
};

class DnaError : public std::runtime_error {
public:
    explicit DnaError(const std::string& what) : std::runtime_error(what) {}
};

// Parse/format errors carry a 1-based line number when known.
class ParseError : public DnaError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DnaError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class CodecError : public DnaError {
public:
    explicit CodecError(const std::string& what) : DnaError(what) {}
};

struct Diagnostic {
    std::string code;      // stable identifier, e.g. "missing-default-rule"
    std::string location;  // human-readable locus, e.g. "gene[2]"

    bool operator==(const Diagnostic&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

// FNV-1a/32 over the big-endian 4-byte serialization of each codon.
u32 fnv1a(const std::vector<u32>& codons);

// The checksum domain: every codon of the encoded form except the age and
// twin_flag fields, the two link segments, and the checksum codon itself.
std::vector<u32> static_codons(const Genome& g, const AttrDict& dict);
u32 checksum(const Genome& g, const AttrDict& dict);

Genome parse_text(const std::string& source);

// Canonical pretty-printed form; parse_text(format_text(g)) == g.
std::string format_text(const Genome& g);

CodonSeq encode(const Genome& g, const AttrDict& dict);
Genome decode(const CodonSeq& seq, const AttrDict& dict);

std::vector<Diagnostic> validate(const Genome& g);
bool is_valid(const Genome& g);

// Positions of the mutable header fields and link segments inside an encoded
// sequence. Lets the runtime update dynamic state in place without touching
// the checksum, and lets monitors re-verify stored codons.
struct WireLayout {
    std::size_t age_index = 0;
    std::size_t twin_index = 0;
    std::size_t neighbor_seg_begin = 0;  // index of the 30 tag
    std::size_t neighbor_seg_end = 0;    // one past the last node id
    std::size_t child_seg_begin = 0;
    std::size_t child_seg_end = 0;
    std::size_t checksum_index = 0;
};

// Structural scan: validates tags, counts and length. Does not need a
// dictionary and does not verify the checksum value.
WireLayout scan_layout(const CodonSeq& seq);  // throws CodecError

// Recomputes the checksum of a stored sequence and compares it to the stored
// checksum codon. Returns false on mismatch; throws CodecError if the
// sequence is not even structurally sound.
bool verify_checksum(const CodonSeq& seq);

// In-place updates of dynamic state. The stored checksum codon is preserved
// (none of these fields belong to the checksum domain).
void poke_age(CodonSeq& seq, const WireLayout& layout, u32 age);
void poke_twin_flag(CodonSeq& seq, const WireLayout& layout, TwinFlag flag);
CodonSeq splice_links(const CodonSeq& seq, const WireLayout& layout,
                      const std::vector<u32>& neighbor_links,
                      const std::vector<u32>& child_links);

// Serialized file form: each codon as 4 big-endian bytes.
std::vector<unsigned char> to_bytes(const CodonSeq& seq);
CodonSeq from_bytes(const std::vector<unsigned char>& bytes);

}  // namespace dnanet
