#include "dnanet/dna.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>

namespace dnanet {

const char* to_string(GeneScope s) {
    switch (s) {
        case GeneScope::Inner: return "inner";
        case GeneScope::Outer: return "outer";
        case GeneScope::Any: return "any";
    }
    return "?";
}

const char* to_string(TwinFlag f) {
    return f == TwinFlag::PrimaryEnabled ? "primary" : "twin";
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
    os << d.code;
    if (!d.location.empty()) os << " at " << d.location;
    return os;
}

u32 AttrDict::intern(const std::string& s) {
    for (std::size_t i = 0; i < strings_.size(); ++i)
        if (strings_[i] == s) return static_cast<u32>(i + 1);
    strings_.push_back(s);
    return static_cast<u32>(strings_.size());
}

std::optional<u32> AttrDict::code_of(const std::string& s) const {
    for (std::size_t i = 0; i < strings_.size(); ++i)
        if (strings_[i] == s) return static_cast<u32>(i + 1);
    return std::nullopt;
}

std::optional<std::string> AttrDict::string_of(u32 code) const {
    if (code == 0 || code > strings_.size()) return std::nullopt;
    return strings_[code - 1];
}

void AttrDict::intern_genome(const Genome& g) {
    auto intern_conds = [this](const std::vector<AttrPair>& conds) {
        for (const auto& [k, v] : conds) {
            intern(k);
            intern(v);
        }
    };
    for (const auto& gene : g.main.genes) intern_conds(gene.conditions);
    for (const auto& rule : g.repro.child_type_rules) intern_conds(rule.conditions);
    for (const auto& gene : g.repro.gene_template) intern_conds(gene.conditions);
}

u32 fnv1a(const std::vector<u32>& codons) {
    u32 h = 2166136261u;
    for (u32 c : codons) {
        for (int shift = 24; shift >= 0; shift -= 8) {
            h ^= (c >> shift) & 0xFFu;
            h *= 16777619u;
        }
    }
    return h;
}

namespace {

u32 attr_code(const AttrDict& dict, const std::string& s) {
    auto code = dict.code_of(s);
    if (!code) throw CodecError("attribute string not in dictionary: '" + s + "'");
    return *code;
}

void emit_gene_segment(std::vector<u32>& out, const std::vector<GeneSpec>& genes,
                       const AttrDict& dict) {
    out.push_back(kTagGenes);
    out.push_back(static_cast<u32>(genes.size()));
    for (const auto& g : genes) {
        out.push_back(g.gene_code);
        out.push_back(static_cast<u32>(g.scope));
        out.push_back(static_cast<u32>(g.conditions.size()));
        for (const auto& [k, v] : g.conditions) {
            out.push_back(attr_code(dict, k));
            out.push_back(attr_code(dict, v));
        }
    }
}

void emit_rule_segment(std::vector<u32>& out, const std::vector<ChildRule>& rules,
                       const AttrDict& dict) {
    out.push_back(kTagChildRules);
    out.push_back(static_cast<u32>(rules.size()));
    for (const auto& r : rules) {
        out.push_back(static_cast<u32>(r.conditions.size()));
        for (const auto& [k, v] : r.conditions) {
            out.push_back(attr_code(dict, k));
            out.push_back(attr_code(dict, v));
        }
        out.push_back(r.child_type);
    }
}

}  // namespace

std::vector<u32> static_codons(const Genome& g, const AttrDict& dict) {
    std::vector<u32> out;
    out.push_back(kMagicCodon);
    out.push_back(kDnaVersion);
    out.push_back(kTagMain);
    out.push_back(kTagHeader);
    out.push_back(g.main.protocol_code);
    out.push_back(g.main.type_code);
    // age, twin_flag and both link segments are outside the checksum domain
    emit_gene_segment(out, g.main.genes, dict);
    out.push_back(kTagRepro);
    emit_rule_segment(out, g.repro.child_type_rules, dict);
    emit_gene_segment(out, g.repro.gene_template, dict);
    return out;
}

u32 checksum(const Genome& g, const AttrDict& dict) {
    return fnv1a(static_codons(g, dict));
}

CodonSeq encode(const Genome& g, const AttrDict& dict) {
    CodonSeq seq;
    auto& out = seq.codons;
    out.push_back(kMagicCodon);
    out.push_back(kDnaVersion);
    out.push_back(kTagMain);
    out.push_back(kTagHeader);
    out.push_back(g.main.protocol_code);
    out.push_back(g.main.type_code);
    out.push_back(g.main.age);
    out.push_back(static_cast<u32>(g.main.twin_flag));
    emit_gene_segment(out, g.main.genes, dict);
    out.push_back(kTagNeighborLinks);
    out.push_back(static_cast<u32>(g.main.neighbor_links.size()));
    out.insert(out.end(), g.main.neighbor_links.begin(), g.main.neighbor_links.end());
    out.push_back(kTagChildLinks);
    out.push_back(static_cast<u32>(g.main.child_links.size()));
    out.insert(out.end(), g.main.child_links.begin(), g.main.child_links.end());
    out.push_back(kTagRepro);
    emit_rule_segment(out, g.repro.child_type_rules, dict);
    emit_gene_segment(out, g.repro.gene_template, dict);
    out.push_back(checksum(g, dict));
    return seq;
}

namespace {

// Cursor over a codon sequence with truncation checks.
class Cursor {
public:
    explicit Cursor(const std::vector<u32>& codons) : codons_(codons) {}

    u32 take(const char* what) {
        if (pos_ >= codons_.size())
            throw CodecError(std::string("truncated segment: expected ") + what);
        return codons_[pos_++];
    }

    void expect_tag(u32 tag, const char* what) {
        u32 got = take(what);
        if (got != tag)
            throw CodecError("unknown segment tag: expected " + std::string(what) +
                             " (" + std::to_string(tag) + "), got " + std::to_string(got));
    }

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return codons_.size() - pos_; }

private:
    const std::vector<u32>& codons_;
    std::size_t pos_ = 0;
};

void skip_gene_segment(Cursor& cur) {
    cur.expect_tag(kTagGenes, "gene segment tag");
    u32 count = cur.take("gene count");
    for (u32 i = 0; i < count; ++i) {
        cur.take("gene code");
        u32 scope = cur.take("gene scope");
        if (scope > 2) throw CodecError("invalid gene scope value " + std::to_string(scope));
        u32 conds = cur.take("condition count");
        for (u32 c = 0; c < conds; ++c) {
            cur.take("condition key");
            cur.take("condition value");
        }
    }
}

}  // namespace

WireLayout scan_layout(const CodonSeq& seq) {
    Cursor cur(seq.codons);
    WireLayout lay;
    u32 magic = cur.take("magic codon");
    if (magic != kMagicCodon)
        throw CodecError("bad magic: expected " + std::to_string(kMagicCodon) + ", got " +
                         std::to_string(magic));
    u32 version = cur.take("version codon");
    if (version != kDnaVersion)
        throw CodecError("unsupported DNA version " + std::to_string(version));
    cur.expect_tag(kTagMain, "MAIN tag");
    cur.expect_tag(kTagHeader, "header tag");
    cur.take("protocol");
    cur.take("type");
    lay.age_index = cur.pos();
    cur.take("age");
    lay.twin_index = cur.pos();
    u32 twin = cur.take("twin flag");
    if (twin > 1) throw CodecError("invalid twin flag value " + std::to_string(twin));
    skip_gene_segment(cur);
    lay.neighbor_seg_begin = cur.pos();
    cur.expect_tag(kTagNeighborLinks, "neighbor link tag");
    u32 n = cur.take("neighbor link count");
    for (u32 i = 0; i < n; ++i) cur.take("neighbor node id");
    lay.neighbor_seg_end = cur.pos();
    lay.child_seg_begin = cur.pos();
    cur.expect_tag(kTagChildLinks, "child link tag");
    u32 m = cur.take("child link count");
    for (u32 i = 0; i < m; ++i) cur.take("child agent id");
    lay.child_seg_end = cur.pos();
    cur.expect_tag(kTagRepro, "REPRO tag");
    cur.expect_tag(kTagChildRules, "child rule tag");
    u32 rules = cur.take("rule count");
    for (u32 i = 0; i < rules; ++i) {
        u32 conds = cur.take("rule condition count");
        for (u32 c = 0; c < conds; ++c) {
            cur.take("rule condition key");
            cur.take("rule condition value");
        }
        cur.take("child type");
    }
    skip_gene_segment(cur);
    lay.checksum_index = cur.pos();
    cur.take("checksum codon");
    if (cur.remaining() != 0)
        throw CodecError("trailing codons after checksum");
    return lay;
}

bool verify_checksum(const CodonSeq& seq) {
    WireLayout lay = scan_layout(seq);
    std::vector<u32> stat;
    stat.reserve(seq.codons.size());
    for (std::size_t i = 0; i < seq.codons.size(); ++i) {
        if (i == lay.age_index || i == lay.twin_index) continue;
        if (i >= lay.neighbor_seg_begin && i < lay.neighbor_seg_end) continue;
        if (i >= lay.child_seg_begin && i < lay.child_seg_end) continue;
        if (i == lay.checksum_index) continue;
        stat.push_back(seq.codons[i]);
    }
    return fnv1a(stat) == seq.codons[lay.checksum_index];
}

namespace {

std::string attr_string(const AttrDict& dict, u32 code, const char* what) {
    auto s = dict.string_of(code);
    if (!s)
        throw CodecError("unknown attribute code " + std::to_string(code) + " in " + what);
    return *s;
}

std::vector<GeneSpec> read_gene_segment(Cursor& cur, const AttrDict& dict) {
    cur.expect_tag(kTagGenes, "gene segment tag");
    u32 count = cur.take("gene count");
    std::vector<GeneSpec> genes;
    genes.reserve(count);
    for (u32 i = 0; i < count; ++i) {
        GeneSpec g;
        g.gene_code = cur.take("gene code");
        u32 scope = cur.take("gene scope");
        if (scope > 2) throw CodecError("invalid gene scope value " + std::to_string(scope));
        g.scope = static_cast<GeneScope>(scope);
        u32 conds = cur.take("condition count");
        for (u32 c = 0; c < conds; ++c) {
            u32 k = cur.take("condition key");
            u32 v = cur.take("condition value");
            g.conditions.emplace_back(attr_string(dict, k, "gene condition"),
                                      attr_string(dict, v, "gene condition"));
        }
        genes.push_back(std::move(g));
    }
    return genes;
}

}  // namespace

Genome decode(const CodonSeq& seq, const AttrDict& dict) {
    // Structural pass first: layout and checksum.
    if (!verify_checksum(seq))
        throw CodecError("checksum mismatch: corrupted DNA");

    Cursor cur(seq.codons);
    Genome g;
    cur.take("magic codon");
    cur.take("version codon");
    cur.take("MAIN tag");
    cur.take("header tag");
    g.main.protocol_code = cur.take("protocol");
    g.main.type_code = cur.take("type");
    g.main.age = cur.take("age");
    g.main.twin_flag = static_cast<TwinFlag>(cur.take("twin flag"));
    g.main.genes = read_gene_segment(cur, dict);
    cur.take("neighbor link tag");
    u32 n = cur.take("neighbor link count");
    for (u32 i = 0; i < n; ++i) g.main.neighbor_links.push_back(cur.take("neighbor node id"));
    cur.take("child link tag");
    u32 m = cur.take("child link count");
    for (u32 i = 0; i < m; ++i) g.main.child_links.push_back(cur.take("child agent id"));
    cur.take("REPRO tag");
    cur.take("child rule tag");
    u32 rules = cur.take("rule count");
    for (u32 i = 0; i < rules; ++i) {
        ChildRule r;
        u32 conds = cur.take("rule condition count");
        for (u32 c = 0; c < conds; ++c) {
            u32 k = cur.take("rule condition key");
            u32 v = cur.take("rule condition value");
            r.conditions.emplace_back(attr_string(dict, k, "rule condition"),
                                      attr_string(dict, v, "rule condition"));
        }
        r.child_type = cur.take("child type");
        g.repro.child_type_rules.push_back(std::move(r));
    }
    g.repro.gene_template = read_gene_segment(cur, dict);
    return g;
}

void poke_age(CodonSeq& seq, const WireLayout& layout, u32 age) {
    seq.codons.at(layout.age_index) = age;
}

void poke_twin_flag(CodonSeq& seq, const WireLayout& layout, TwinFlag flag) {
    seq.codons.at(layout.twin_index) = static_cast<u32>(flag);
}

CodonSeq splice_links(const CodonSeq& seq, const WireLayout& layout,
                      const std::vector<u32>& neighbor_links,
                      const std::vector<u32>& child_links) {
    const auto& src = seq.codons;
    CodonSeq out;
    auto& dst = out.codons;
    dst.insert(dst.end(), src.begin(), src.begin() + layout.neighbor_seg_begin);
    dst.push_back(kTagNeighborLinks);
    dst.push_back(static_cast<u32>(neighbor_links.size()));
    dst.insert(dst.end(), neighbor_links.begin(), neighbor_links.end());
    dst.push_back(kTagChildLinks);
    dst.push_back(static_cast<u32>(child_links.size()));
    dst.insert(dst.end(), child_links.begin(), child_links.end());
    dst.insert(dst.end(), src.begin() + layout.child_seg_end, src.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

u32 parse_u32(const std::string& s, std::size_t line, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, std::string("expected unsigned integer for ") + what +
                                   ", got '" + s + "'");
    unsigned long long v = 0;
    for (char c : s) {
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > 0xFFFFFFFFull) throw ParseError(line, std::string(what) + " out of range");
    }
    return static_cast<u32>(v);
}

std::vector<AttrPair> parse_cond_list(const std::string& s, std::size_t line) {
    std::vector<AttrPair> conds;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            throw ParseError(line, "malformed condition '" + item + "', expected k=v");
        conds.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (conds.empty()) throw ParseError(line, "empty condition list");
    return conds;
}

GeneScope parse_scope(const std::string& s, std::size_t line) {
    if (s == "inner") return GeneScope::Inner;
    if (s == "outer") return GeneScope::Outer;
    if (s == "any") return GeneScope::Any;
    throw ParseError(line, "unknown scope '" + s + "'");
}

// GENE <code> [scope=inner|outer|any] [when k=v[,k=v...]]
// Option order is free; 'when' opens a condition list that may also be split
// across several tokens. A scope= token always binds to the scope option.
GeneSpec parse_gene_line(const std::vector<std::string>& toks, std::size_t line) {
    GeneSpec g;
    g.gene_code = parse_u32(toks.at(1), line, "gene code");
    bool in_when = false;
    for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.rfind("scope=", 0) == 0) {
            g.scope = parse_scope(t.substr(6), line);
            in_when = false;
        } else if (t == "when") {
            in_when = true;
        } else if (in_when) {
            auto conds = parse_cond_list(t, line);
            g.conditions.insert(g.conditions.end(), conds.begin(), conds.end());
        } else {
            throw ParseError(line, "unexpected token '" + t + "' on GENE line");
        }
    }
    return g;
}

}  // namespace

Genome parse_text(const std::string& source) {
    enum class Section { Preamble, Main, Repro, Done };
    Section section = Section::Preamble;
    Genome g;
    bool saw_dna = false, saw_header = false, saw_main = false, saw_repro = false;
    bool saw_default_rule = false;

    std::istringstream is(source);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];

        if (kw == "DNA") {
            if (saw_dna) throw ParseError(line_no, "duplicate DNA line");
            if (toks.size() != 2 || parse_u32(toks[1], line_no, "DNA version") != kDnaVersion)
                throw ParseError(line_no, "expected 'DNA 1'");
            saw_dna = true;
        } else if (kw == "MAIN") {
            if (!saw_dna) throw ParseError(line_no, "MAIN before DNA line");
            if (saw_main) throw ParseError(line_no, "duplicate MAIN");
            saw_main = true;
            section = Section::Main;
        } else if (kw == "HEADER") {
            if (section != Section::Main) throw ParseError(line_no, "HEADER outside MAIN");
            if (saw_header) throw ParseError(line_no, "duplicate HEADER");
            saw_header = true;
            bool saw_type = false;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                if (t.rfind("type=", 0) == 0) {
                    g.main.type_code = parse_u32(t.substr(5), line_no, "type");
                    saw_type = true;
                } else if (t.rfind("protocol=", 0) == 0) {
                    g.main.protocol_code = parse_u32(t.substr(9), line_no, "protocol");
                } else if (t.rfind("age=", 0) == 0) {
                    g.main.age = parse_u32(t.substr(4), line_no, "age");
                } else if (t.rfind("twin=", 0) == 0) {
                    std::string v = t.substr(5);
                    if (v == "primary") g.main.twin_flag = TwinFlag::PrimaryEnabled;
                    else if (v == "twin") g.main.twin_flag = TwinFlag::TwinEnabled;
                    else throw ParseError(line_no, "twin must be primary or twin");
                } else {
                    throw ParseError(line_no, "unexpected HEADER field '" + t + "'");
                }
            }
            if (!saw_type) throw ParseError(line_no, "HEADER missing type=");
        } else if (kw == "GENE") {
            if (toks.size() < 2) throw ParseError(line_no, "GENE needs a code");
            if (section == Section::Main)
                g.main.genes.push_back(parse_gene_line(toks, line_no));
            else if (section == Section::Repro)
                g.repro.gene_template.push_back(parse_gene_line(toks, line_no));
            else
                throw ParseError(line_no, "GENE outside MAIN/REPRO");
        } else if (kw == "NEIGHBORS" || kw == "CHILDREN") {
            // Runtime link state; emitted by the canonical printer when present.
            if (section != Section::Main)
                throw ParseError(line_no, kw + " outside MAIN");
            auto& dst = (kw == "NEIGHBORS") ? g.main.neighbor_links : g.main.child_links;
            for (std::size_t i = 1; i < toks.size(); ++i)
                dst.push_back(parse_u32(toks[i], line_no, "link id"));
        } else if (kw == "REPRO") {
            if (!saw_main) throw ParseError(line_no, "REPRO before MAIN");
            if (saw_repro) throw ParseError(line_no, "duplicate REPRO");
            saw_repro = true;
            section = Section::Repro;
        } else if (kw == "CHILD") {
            if (section != Section::Repro) throw ParseError(line_no, "CHILD outside REPRO");
            // CHILD when k=v[,...] -> <type>   |   CHILD default -> <type>
            if (toks.size() < 4 || toks[toks.size() - 2] != "->")
                throw ParseError(line_no, "expected 'CHILD when k=v -> type' or 'CHILD default -> type'");
            ChildRule rule;
            rule.child_type = parse_u32(toks.back(), line_no, "child type");
            if (toks[1] == "default") {
                if (toks.size() != 4) throw ParseError(line_no, "malformed CHILD default rule");
                saw_default_rule = true;
            } else if (toks[1] == "when") {
                for (std::size_t i = 2; i + 2 < toks.size(); ++i) {
                    auto conds = parse_cond_list(toks[i], line_no);
                    rule.conditions.insert(rule.conditions.end(), conds.begin(), conds.end());
                }
                if (rule.conditions.empty())
                    throw ParseError(line_no, "CHILD when rule has no conditions");
            } else {
                throw ParseError(line_no, "expected 'when' or 'default' after CHILD");
            }
            g.repro.child_type_rules.push_back(std::move(rule));
        } else if (kw == "END") {
            section = Section::Done;
        } else {
            throw ParseError(line_no, "unknown keyword '" + kw + "'");
        }
    }

    if (!saw_dna) throw ParseError(line_no, "missing DNA line");
    if (!saw_main || !saw_header) throw ParseError(line_no, "missing MAIN/HEADER");
    if (!saw_repro) throw ParseError(line_no, "missing REPRO strand");
    if (!saw_default_rule) throw ParseError(line_no, "missing default child rule");
    return g;
}

namespace {

void format_conds(std::ostream& os, const std::vector<AttrPair>& conds) {
    for (std::size_t i = 0; i < conds.size(); ++i)
        os << (i ? "," : "") << conds[i].first << "=" << conds[i].second;
}

void format_gene(std::ostream& os, const GeneSpec& g) {
    os << "GENE " << g.gene_code;
    if (g.scope != GeneScope::Any) os << " scope=" << to_string(g.scope);
    if (!g.conditions.empty()) {
        os << " when ";
        format_conds(os, g.conditions);
    }
    os << "\n";
}

}  // namespace

std::string format_text(const Genome& g) {
    std::ostringstream os;
    os << "DNA " << kDnaVersion << "\n";
    os << "MAIN\n";
    os << "HEADER type=" << g.main.type_code << " protocol=" << g.main.protocol_code;
    if (g.main.age != 0) os << " age=" << g.main.age;
    if (g.main.twin_flag != TwinFlag::PrimaryEnabled)
        os << " twin=" << to_string(g.main.twin_flag);
    os << "\n";
    for (const auto& gene : g.main.genes) format_gene(os, gene);
    if (!g.main.neighbor_links.empty()) {
        os << "NEIGHBORS";
        for (u32 id : g.main.neighbor_links) os << " " << id;
        os << "\n";
    }
    if (!g.main.child_links.empty()) {
        os << "CHILDREN";
        for (u32 id : g.main.child_links) os << " " << id;
        os << "\n";
    }
    os << "REPRO\n";
    for (const auto& rule : g.repro.child_type_rules) {
        if (rule.is_default()) {
            os << "CHILD default -> " << rule.child_type << "\n";
        } else {
            os << "CHILD when ";
            format_conds(os, rule.conditions);
            os << " -> " << rule.child_type << "\n";
        }
    }
    for (const auto& gene : g.repro.gene_template) format_gene(os, gene);
    os << "END\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_gene_list(const std::vector<GeneSpec>& genes, const char* where,
                     std::vector<Diagnostic>& out) {
    for (std::size_t i = 0; i < genes.size(); ++i) {
        const auto& g = genes[i];
        std::string loc = std::string(where) + "[" + std::to_string(i) + "]";
        if (g.gene_code == 0) out.push_back({"zero-gene-code", loc});
        std::set<AttrPair> seen;
        for (const auto& c : g.conditions)
            if (!seen.insert(c).second) out.push_back({"duplicate-condition", loc});
    }
}

}  // namespace

std::vector<Diagnostic> validate(const Genome& g) {
    std::vector<Diagnostic> diags;
    if (g.main.type_code == 0) diags.push_back({"zero-type-code", "header"});
    if (g.main.genes.empty()) diags.push_back({"empty-main-strand", "main"});
    check_gene_list(g.main.genes, "gene", diags);
    check_gene_list(g.repro.gene_template, "template", diags);

    const auto& rules = g.repro.child_type_rules;
    std::size_t defaults = 0;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        std::string loc = "rule[" + std::to_string(i) + "]";
        if (rules[i].is_default()) {
            ++defaults;
            if (defaults > 1) diags.push_back({"duplicate-default-rule", loc});
            else if (i + 1 != rules.size()) diags.push_back({"default-rule-not-last", loc});
        }
        std::set<AttrPair> seen;
        for (const auto& c : rules[i].conditions)
            if (!seen.insert(c).second) diags.push_back({"duplicate-condition", loc});
    }
    if (defaults == 0) diags.push_back({"missing-default-rule", "repro"});
    return diags;
}

bool is_valid(const Genome& g) { return validate(g).empty(); }

std::vector<unsigned char> to_bytes(const CodonSeq& seq) {
    std::vector<unsigned char> bytes;
    bytes.reserve(seq.codons.size() * 4);
    for (u32 c : seq.codons) {
        bytes.push_back(static_cast<unsigned char>((c >> 24) & 0xFF));
        bytes.push_back(static_cast<unsigned char>((c >> 16) & 0xFF));
        bytes.push_back(static_cast<unsigned char>((c >> 8) & 0xFF));
        bytes.push_back(static_cast<unsigned char>(c & 0xFF));
    }
    return bytes;
}

CodonSeq from_bytes(const std::vector<unsigned char>& bytes) {
    if (bytes.size() % 4 != 0)
        throw CodecError("byte stream length is not a multiple of 4");
    CodonSeq seq;
    seq.codons.reserve(bytes.size() / 4);
    for (std::size_t i = 0; i < bytes.size(); i += 4) {
        u32 c = (static_cast<u32>(bytes[i]) << 24) | (static_cast<u32>(bytes[i + 1]) << 16) |
                (static_cast<u32>(bytes[i + 2]) << 8) | static_cast<u32>(bytes[i + 3]);
        seq.codons.push_back(c);
    }
    return seq;
}

}  // namespace dnanet
