#pragma once

#include <span>

namespace logenr::golden {

// kind: 'B' boundary, 'E' exceptional, 'O' circle.
struct VertexRow {
    const char* id;
    int self_int;
    const char* coeff;
    char kind;
    const char* label;
};

struct Table {
    std::span<const VertexRow> vertices;
    // Each path lists ids whose consecutive pairs meet once.
    std::span<const char* const> paths;
};

Table table(bool a26);

}  // namespace logenr::golden
