#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dnanet/dna.hpp"

// The shared gene database: maps gene codes to executable duty handlers,
// evaluates position-dependent activation, and loads membranes.

namespace dnanet {

// Attribute set of one network node.
struct NodeAttrs {
    std::map<std::string, std::string> attrs;

    bool has(const std::string& key, const std::string& value) const {
        auto it = attrs.find(key);
        return it != attrs.end() && it->second == value;
    }
    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = attrs.find(key);
        return it == attrs.end() ? fallback : it->second;
    }
    bool operator==(const NodeAttrs&) const = default;
};

struct ManifestEntry {
    u32 gene_code = 0;
    std::string name;
    u32 version = 0;
    std::string pack;

    bool operator==(const ManifestEntry&) const = default;
};

struct GeneManifest {
    std::map<u32, ManifestEntry> entries;

    bool operator==(const GeneManifest&) const = default;
};

// Manifest file: `GENEPACK <name> <version>` followed by `GENE <code> <name>` lines.
GeneManifest parse_manifest(const std::string& source);
std::string format_manifest(const GeneManifest& m);

// The canonical pack shipped with the runtime, codes 101..108.
const std::string& standard_manifest_text();

class RegistryError : public DnaError {
public:
    explicit RegistryError(const std::string& what) : DnaError(what) {}
};

// Execution context a handler runs in; defined by the runtime.
struct GeneCallCtx;
using GeneFn = std::function<void(GeneCallCtx&)>;

struct GeneHandler {
    ManifestEntry entry;
    GeneFn fn;
};

// The agent's membrane: handlers of the genes active at the host node,
// in strand order. Fixed between rebinds.
struct BoundGene {
    GeneSpec spec;  // the strand entry that activated, including its scope
    const GeneHandler* handler = nullptr;
};

struct Membrane {
    std::vector<BoundGene> bound;

    std::size_t size() const { return bound.size(); }
    bool empty() const { return bound.empty(); }
};

// Which gene set an agent loads: inside-the-cluster duties or
// outside-network duties.
enum class ActivationContext { Inner, Outer };

class GeneRegistry {
public:
    // register by entry; duplicate codes are an error.
    void register_gene(const ManifestEntry& entry, GeneFn fn);
    const GeneHandler* resolve(u32 gene_code) const;  // nullptr if absent
    std::vector<u32> codes() const;                   // ascending
    const GeneManifest& manifest() const { return manifest_; }

private:
    GeneManifest manifest_;
    std::map<u32, GeneHandler> handlers_;
};

// A gene is active iff its scope admits the context and every condition pair
// matches the node's attributes exactly. Strand order is preserved.
bool gene_active(const GeneSpec& gene, const NodeAttrs& node, ActivationContext context);
std::vector<GeneSpec> active_genes(const Genome& genome, const NodeAttrs& node,
                                   ActivationContext context);

// Binds handlers for exactly the active genes. Throws RegistryError naming
// the first gene code the registry cannot resolve.
Membrane load_membrane(const Genome& genome, const NodeAttrs& node,
                       ActivationContext context, const GeneRegistry& registry);

}  // namespace dnanet
