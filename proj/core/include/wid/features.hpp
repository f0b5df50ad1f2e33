#pragma once

#include <map>
#include <string>
#include <vector>

#include "wid/blocks.hpp"

namespace wid {

enum class DescriptorKind { Lbp, Lpq, Surf };

const char* descriptor_kind_name(DescriptorKind kind);
DescriptorKind descriptor_kind_from_name(const std::string& name);

enum class Normalization { RawCounts, L1 };

struct HistogramFeature {
    DescriptorKind kind = DescriptorKind::Lbp;
    std::vector<double> bins;
    Normalization norm = Normalization::RawCounts;

    HistogramFeature l1_normalized() const;
};

// One cached feature vector. Histogram descriptors produce exactly one record
// per block; SURF produces one record per keypoint instance, in keypoint
// order, all sharing the block index.
struct FeatureRecord {
    std::string writer_id;
    std::string document_id;
    int block_index = 0;
    DescriptorKind kind = DescriptorKind::Lbp;
    std::vector<double> values;
};

// Delimited text, one record per line:
//   writer_id,document_id,block_index,descriptor_kind,v0,v1,...
// Values carry 9 significant digits.
void save_feature_cache(const std::vector<FeatureRecord>& records, const std::string& path);
std::vector<FeatureRecord> load_feature_cache(const std::string& path);

struct BlockKey {
    std::string writer_id;
    std::string document_id;
    int block_index = 0;

    auto operator<=>(const BlockKey&) const = default;
};

// Cache records grouped per block, instance order preserved.
class FeatureStore {
public:
    FeatureStore() = default;
    explicit FeatureStore(const std::vector<FeatureRecord>& records);

    // Throws FeatureCacheMiss when the block has no records.
    const std::vector<std::vector<double>>& instances(const BlockKey& key) const;
    bool contains(const BlockKey& key) const;
    size_t block_count() const { return by_block_.size(); }
    size_t dimension() const { return dimension_; }

private:
    std::map<BlockKey, std::vector<std::vector<double>>> by_block_;
    size_t dimension_ = 0;
};

} // namespace wid
