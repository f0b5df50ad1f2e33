#include "wid/features.hpp"

#include <fstream>

#include "wid/error.hpp"
#include "wid/util.hpp"

namespace wid {

const char* descriptor_kind_name(DescriptorKind kind) {
    switch (kind) {
        case DescriptorKind::Lbp: return "lbp";
        case DescriptorKind::Lpq: return "lpq";
        case DescriptorKind::Surf: return "surf";
    }
    return "?";
}

DescriptorKind descriptor_kind_from_name(const std::string& name) {
    std::string n = to_lower(trim(name));
    if (n == "lbp") return DescriptorKind::Lbp;
    if (n == "lpq") return DescriptorKind::Lpq;
    if (n == "surf") return DescriptorKind::Surf;
    throw Error(ErrorCode::ConfigError, "unknown descriptor: " + name);
}

HistogramFeature HistogramFeature::l1_normalized() const {
    HistogramFeature out = *this;
    double total = 0.0;
    for (double b : bins) total += b;
    if (total > 0.0)
        for (double& b : out.bins) b /= total;
    out.norm = Normalization::L1;
    return out;
}

void save_feature_cache(const std::vector<FeatureRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    for (const auto& rec : records) {
        out << rec.writer_id << ',' << rec.document_id << ',' << rec.block_index << ','
            << descriptor_kind_name(rec.kind);
        for (double v : rec.values) out << ',' << format_double_sig(v, 9);
        out << '\n';
    }
}

std::vector<FeatureRecord> load_feature_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::vector<FeatureRecord> records;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() < 5)
            throw Error(ErrorCode::IoError,
                        str_printf("feature cache %s line %zu: too few fields", path.c_str(),
                                   lineno));
        FeatureRecord rec;
        rec.writer_id = fields[0];
        rec.document_id = fields[1];
        long idx = 0;
        if (!parse_long(fields[2], idx))
            throw Error(ErrorCode::IoError,
                        str_printf("feature cache %s line %zu: bad block index", path.c_str(),
                                   lineno));
        rec.block_index = int(idx);
        rec.kind = descriptor_kind_from_name(fields[3]);
        rec.values.reserve(fields.size() - 4);
        for (size_t i = 4; i < fields.size(); ++i) {
            double v = 0.0;
            if (!parse_double(fields[i], v))
                throw Error(ErrorCode::IoError,
                            str_printf("feature cache %s line %zu: bad value", path.c_str(),
                                       lineno));
            rec.values.push_back(v);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

FeatureStore::FeatureStore(const std::vector<FeatureRecord>& records) {
    for (const auto& rec : records) {
        if (dimension_ == 0) dimension_ = rec.values.size();
        if (rec.values.size() != dimension_)
            throw Error(ErrorCode::ShapeError,
                        str_printf("feature dimension mismatch: %zu vs %zu", rec.values.size(),
                                   dimension_));
        by_block_[{rec.writer_id, rec.document_id, rec.block_index}].push_back(rec.values);
    }
}

const std::vector<std::vector<double>>& FeatureStore::instances(const BlockKey& key) const {
    auto it = by_block_.find(key);
    if (it == by_block_.end())
        throw Error(ErrorCode::FeatureCacheMiss,
                    "no cached feature for block " + key.writer_id + "/" + key.document_id + "/" +
                        std::to_string(key.block_index));
    return it->second;
}

bool FeatureStore::contains(const BlockKey& key) const { return by_block_.count(key) != 0; }

} // namespace wid
