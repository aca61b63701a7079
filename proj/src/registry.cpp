#include "dnanet/registry.hpp"

#include <sstream>

namespace dnanet {

GeneManifest parse_manifest(const std::string& source) {
    GeneManifest m;
    std::string pack_name;
    u32 pack_version = 0;
    bool saw_pack = false;

    std::istringstream is(source);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "GENEPACK") {
            if (!(ls >> pack_name >> pack_version))
                throw ParseError(line_no, "expected 'GENEPACK <name> <version>'");
            saw_pack = true;
        } else if (kw == "GENE") {
            if (!saw_pack) throw ParseError(line_no, "GENE before any GENEPACK");
            u32 code = 0;
            std::string name;
            if (!(ls >> code >> name))
                throw ParseError(line_no, "expected 'GENE <code> <name>'");
            if (code == 0) throw ParseError(line_no, "gene code must be > 0");
            ManifestEntry e{code, name, pack_version, pack_name};
            if (!m.entries.emplace(code, e).second)
                throw ParseError(line_no, "duplicate gene code " + std::to_string(code));
        } else {
            throw ParseError(line_no, "unknown manifest keyword '" + kw + "'");
        }
    }
    return m;
}

std::string format_manifest(const GeneManifest& m) {
    // Group by pack, preserving code order inside each pack.
    std::ostringstream os;
    std::vector<std::pair<std::string, u32>> packs;
    for (const auto& [code, e] : m.entries) {
        std::pair<std::string, u32> key{e.pack, e.version};
        bool known = false;
        for (const auto& p : packs) known = known || p == key;
        if (!known) packs.push_back(key);
    }
    for (const auto& [pack, version] : packs) {
        os << "GENEPACK " << pack << " " << version << "\n";
        for (const auto& [code, e] : m.entries)
            if (e.pack == pack && e.version == version)
                os << "GENE " << code << " " << e.name << "\n";
    }
    return os.str();
}

const std::string& standard_manifest_text() {
    static const std::string text =
        "GENEPACK standard 1\n"
        "GENE 101 spread\n"
        "GENE 102 heartbeat-sync\n"
        "GENE 103 twin-watch\n"
        "GENE 104 monitor-walk\n"
        "GENE 105 emergency-dispatch\n"
        "GENE 106 battery-control\n"
        "GENE 107 blackboard-publish\n"
        "GENE 108 dna-reprogram\n";
    return text;
}

void GeneRegistry::register_gene(const ManifestEntry& entry, GeneFn fn) {
    if (handlers_.count(entry.gene_code))
        throw RegistryError("duplicate gene code " + std::to_string(entry.gene_code));
    manifest_.entries.emplace(entry.gene_code, entry);
    handlers_.emplace(entry.gene_code, GeneHandler{entry, std::move(fn)});
}

const GeneHandler* GeneRegistry::resolve(u32 gene_code) const {
    auto it = handlers_.find(gene_code);
    return it == handlers_.end() ? nullptr : &it->second;
}

std::vector<u32> GeneRegistry::codes() const {
    std::vector<u32> out;
    for (const auto& [code, h] : handlers_) out.push_back(code);
    return out;
}

bool gene_active(const GeneSpec& gene, const NodeAttrs& node, ActivationContext context) {
    if (gene.scope != GeneScope::Any) {
        bool inner = gene.scope == GeneScope::Inner;
        if (inner != (context == ActivationContext::Inner)) return false;
    }
    for (const auto& [k, v] : gene.conditions)
        if (!node.has(k, v)) return false;
    return true;
}

std::vector<GeneSpec> active_genes(const Genome& genome, const NodeAttrs& node,
                                   ActivationContext context) {
    std::vector<GeneSpec> out;
    for (const auto& gene : genome.main.genes)
        if (gene_active(gene, node, context)) out.push_back(gene);
    return out;
}

Membrane load_membrane(const Genome& genome, const NodeAttrs& node,
                       ActivationContext context, const GeneRegistry& registry) {
    Membrane m;
    for (const auto& gene : active_genes(genome, node, context)) {
        const GeneHandler* h = registry.resolve(gene.gene_code);
        if (!h)
            throw RegistryError("unresolved gene code " + std::to_string(gene.gene_code) +
                                ": not in the gene database");
        m.bound.push_back(BoundGene{gene, h});
    }
    return m;
}

}  // namespace dnanet
