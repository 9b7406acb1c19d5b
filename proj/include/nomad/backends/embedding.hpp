#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nomad {

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

class EmbeddingBackend {
public:
    virtual ~EmbeddingBackend() = default;
    virtual int dimension() const = 0;
    virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;

    std::vector<double> embed_one(const std::string& text);
};

/// Seeded hash-derived unit vectors, stable across runs and platforms. The
/// Gaussian deviates come from an explicit Box-Muller transform so no
/// implementation-defined distribution sneaks into persisted artifacts.
class HashEmbeddingBackend : public EmbeddingBackend {
public:
    explicit HashEmbeddingBackend(uint64_t seed = 0, int dim = 64) : seed_(seed), dim_(dim) {}

    int dimension() const override { return dim_; }
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

private:
    uint64_t seed_;
    int dim_;
};

/// Serves preset vectors by exact text, falling back to an inner backend for
/// everything else. Used by tests that need controlled cosine values.
class StaticEmbeddingBackend : public EmbeddingBackend {
public:
    StaticEmbeddingBackend(std::map<std::string, std::vector<double>> table, int dim,
                           EmbeddingBackend* fallback = nullptr)
        : table_(std::move(table)), dim_(dim), fallback_(fallback) {}

    int dimension() const override { return dim_; }
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

private:
    std::map<std::string, std::vector<double>> table_;
    int dim_;
    EmbeddingBackend* fallback_;
};

}  // namespace nomad
