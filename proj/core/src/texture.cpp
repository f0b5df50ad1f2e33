#include "wid/texture.hpp"

#include <algorithm>

#include "wid/error.hpp"

namespace wid {

BinaryImage TextureImage::ink_mask(const std::vector<ConnectedComponent>& comps) const {
    BinaryImage mask(image.width, image.height);
    for (const auto& pc : placements) {
        const auto& comp = comps[pc.component];
        for (const auto& p : comp.pixels) mask.set(p.x + pc.dx, p.y + pc.dy, true);
    }
    return mask;
}

TextureImage generate_texture(const GrayImage& doc, const BinaryImage& mask,
                              const CompactionParams& params,
                              const std::string& source_document_id) {
    if (doc.width != mask.width || doc.height != mask.height)
        throw Error(ErrorCode::ShapeError, "document and mask dimensions differ");
    auto comps = connected_components(mask);
    if (comps.empty()) throw Error(ErrorCode::BlankDocument, "mask has no ink components");

    struct Slot {
        size_t comp;
        int x;
        int row;
    };
    std::vector<Slot> slots;
    slots.reserve(comps.size());
    std::vector<int> row_heights;
    std::vector<int> row_widths;

    int cursor_x = 0;
    int row = -1;
    for (size_t i = 0; i < comps.size(); ++i) {
        int w = comps[i].width();
        int h = comps[i].height();
        if (row < 0 || (cursor_x > 0 && cursor_x + w > params.row_width)) {
            ++row;
            row_heights.push_back(0);
            row_widths.push_back(0);
            cursor_x = 0;
        }
        slots.push_back({i, cursor_x, row});
        row_heights[row] = std::max(row_heights[row], h);
        row_widths[row] = cursor_x + w;
        cursor_x += w + params.inter_component_gap;
    }

    int canvas_w = *std::max_element(row_widths.begin(), row_widths.end());
    int canvas_h = 0;
    std::vector<int> row_y(row_heights.size());
    for (size_t r = 0; r < row_heights.size(); ++r) {
        if (r > 0) canvas_h += params.inter_row_gap;
        row_y[r] = canvas_h;
        canvas_h += row_heights[r];
    }

    TextureImage tex;
    tex.image = GrayImage(canvas_w, canvas_h, 255);
    tex.source_document_id = source_document_id;
    tex.params = params;
    tex.placements.reserve(slots.size());

    for (const auto& slot : slots) {
        const auto& comp = comps[slot.comp];
        int dx = slot.x - comp.bbox.x0;
        int dy = row_y[slot.row] - comp.bbox.y0;
        // Copy only the component's own pixels; overlapping bounding boxes in
        // the source must not bleed other strokes into this slot.
        for (const auto& p : comp.pixels) tex.image.at(p.x + dx, p.y + dy) = doc.at(p.x, p.y);
        tex.placements.push_back({slot.comp, dx, dy});
    }
    return tex;
}

double ink_density(const BinaryImage& mask) {
    size_t total = size_t(mask.width) * mask.height;
    if (total == 0) return 0.0;
    return double(mask.ink_count()) / double(total);
}

} // namespace wid
