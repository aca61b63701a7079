#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dnanet/registry.hpp"

// Persistence seam for the gene database. One local-file backend ships;
// the interface is the extension point for networked backends.

namespace dnanet {

class StoreError : public DnaError {
public:
    explicit StoreError(const std::string& what) : DnaError(what) {}
};

class StoreBackend {
public:
    virtual ~StoreBackend() = default;
    virtual std::optional<ManifestEntry> get(u32 gene_code) const = 0;
    virtual std::vector<ManifestEntry> list() const = 0;  // ascending code
    virtual void put(const ManifestEntry& entry) = 0;     // authoring/tests only
    virtual std::string backend_id() const = 0;
};

// In-memory backend for authoring and tests.
class MemoryStore : public StoreBackend {
public:
    MemoryStore() = default;
    explicit MemoryStore(GeneManifest manifest) : manifest_(std::move(manifest)) {}

    std::optional<ManifestEntry> get(u32 gene_code) const override;
    std::vector<ManifestEntry> list() const override;
    void put(const ManifestEntry& entry) override;
    std::string backend_id() const override { return "memory"; }

private:
    GeneManifest manifest_;
};

// Read-only manifest-file backend; put() throws.
class LocalFileStore : public StoreBackend {
public:
    explicit LocalFileStore(GeneManifest manifest, std::string path)
        : manifest_(std::move(manifest)), path_(std::move(path)) {}

    std::optional<ManifestEntry> get(u32 gene_code) const override;
    std::vector<ManifestEntry> list() const override;
    void put(const ManifestEntry&) override {
        throw StoreError("local-file store is read-only at run time");
    }
    std::string backend_id() const override { return "local-file"; }
    const std::string& path() const { return path_; }

private:
    GeneManifest manifest_;
    std::string path_;
};

std::unique_ptr<StoreBackend> open_local(const std::string& manifest_path);
std::unique_ptr<StoreBackend> open_memory(const std::string& manifest_text);

// Preflight: empty iff every required code resolves against the backend.
std::vector<Diagnostic> verify_store(const StoreBackend& backend,
                                     const std::vector<u32>& required_codes);

}  // namespace dnanet
