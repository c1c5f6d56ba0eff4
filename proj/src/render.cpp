#include "sturmpart/render.hpp"

#include <algorithm>

namespace sturmpart {

namespace {

std::vector<std::string> tower_cells(const RokhlinTower& tower, const Word* code) {
    std::vector<std::string> cells;
    long long h = tower.height();
    for (long long j = 0; j < h; ++j) {
        Arc level = tower_level(tower, tower.to - 1 - j); // top first
        std::string text = "[" + level.start.str() + " .. " + level.end.str() + ")";
        if (code) text += "  " + (*code)[(size_t)j];
        cells.push_back(std::move(text));
    }
    return cells;
}

std::vector<std::string> boxed_column(const std::vector<std::string>& cells, size_t width) {
    std::string rule_line = "+" + std::string(width + 2, '-') + "+";
    std::vector<std::string> out;
    out.push_back(rule_line);
    for (const auto& c : cells) {
        out.push_back("| " + c + std::string(width - c.size(), ' ') + " |");
        out.push_back(rule_line);
    }
    return out;
}

} // namespace

std::string render_towers_ascii(const TowerPair& pair, const LabeledPartition* code_partition,
                                const Limits& limits) {
    if (pair.left.height() > limits.max_render_levels ||
        pair.right.height() > limits.max_render_levels)
        throw resource_limit_error("render: tower height exceeds the render cap of " +
                                   std::to_string(limits.max_render_levels) + " levels");
    Word left_code, right_code;
    if (code_partition) {
        left_code = tower_code(*code_partition, pair.left);
        right_code = tower_code(*code_partition, pair.right);
    }
    auto left_cells = tower_cells(pair.left, code_partition ? &left_code : nullptr);
    auto right_cells = tower_cells(pair.right, code_partition ? &right_code : nullptr);

    size_t lw = 0, rw = 0;
    for (const auto& c : left_cells) lw = std::max(lw, c.size());
    for (const auto& c : right_cells) rw = std::max(rw, c.size());

    auto left_box = boxed_column(left_cells, lw);
    auto right_box = boxed_column(right_cells, rw);

    // Align bases at the bottom; pad the shorter box with blank lines on top.
    size_t rows = std::max(left_box.size(), right_box.size());
    std::string blank_left(left_box[0].size(), ' ');
    std::string out;
    out += "towers k=" + std::to_string(pair.k) + ": Lambda(I_k,0,q_{k-1}) height " +
           std::to_string(pair.left.height()) + " | Lambda(I_{k-1},0,q_k) height " +
           std::to_string(pair.right.height()) + "\n";
    for (size_t row = 0; row < rows; ++row) {
        bool has_left = row >= rows - left_box.size();
        bool has_right = row >= rows - right_box.size();
        out += has_left ? left_box[row - (rows - left_box.size())] : blank_left;
        out += "   ";
        if (has_right) out += right_box[row - (rows - right_box.size())];
        out += "\n";
    }
    out += "bases: " + tower_base(pair.left).str() + " and " + tower_base(pair.right).str() +
           " meet at <0>\n";
    return out;
}

} // namespace sturmpart
