#pragma once

#include <string>
#include <vector>

#include "wid/components.hpp"
#include "wid/image.hpp"

namespace wid {

struct CompactionParams {
    int row_width = 2304;       // 9 x default block width
    int inter_component_gap = 3;
    int inter_row_gap = 2;
};

struct PlacedComponent {
    size_t component = 0; // index into the reading-order component list
    int dx = 0;           // translation applied to the component's pixels
    int dy = 0;
};

// Compacted rendering of a manuscript: connected components re-flowed into
// dense rows, each translated only, original grayscale copied onto white.
struct TextureImage {
    GrayImage image;
    std::string source_document_id;
    CompactionParams params;
    std::vector<PlacedComponent> placements;

    // Ink mask implied by the placements (the translated component pixels).
    BinaryImage ink_mask(const std::vector<ConnectedComponent>& comps) const;
};

// Re-flows the mask's components (in reading order) into rows of width
// row_width. A new row starts when the next component would overflow; a
// component wider than the row gets a row of its own. Row height is the
// tallest component in the row; rows are separated by inter_row_gap.
// Throws BlankDocument when the mask has no components.
TextureImage generate_texture(const GrayImage& doc, const BinaryImage& mask,
                              const CompactionParams& params,
                              const std::string& source_document_id = "");

double ink_density(const BinaryImage& mask);

} // namespace wid
