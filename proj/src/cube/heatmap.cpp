#include "rlx/cube/heatmap.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rlx {

namespace {

std::size_t cell_index(const CubeConfig& c, int g, int w, int b, int d) {
    return static_cast<std::size_t>(
        ((static_cast<std::int64_t>(g) * c.width + w) * c.breadth + b) * c.depth + d);
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return out;
}

}  // namespace

std::vector<std::vector<int>> cube_top_view(const CubeConfig& config,
                                            std::span<const std::uint64_t> visits, int cube) {
    std::vector<std::vector<int>> top(static_cast<std::size_t>(config.breadth),
                                      std::vector<int>(static_cast<std::size_t>(config.width), 0));
    for (int b = 0; b < config.breadth; ++b) {
        for (int w = 0; w < config.width; ++w) {
            int depths = 0;
            for (int d = 0; d < config.depth; ++d) {
                if (visits[cell_index(config, cube, w, b, d)] > 0) ++depths;
            }
            top[static_cast<std::size_t>(b)][static_cast<std::size_t>(w)] = depths;
        }
    }
    return top;
}

void write_heatmaps(const CubeConfig& config, std::span<const std::uint64_t> visits,
                    const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (int g = 0; g < config.cubes; ++g) {
        auto top = cube_top_view(config, visits, g);
        auto csv = open_out(dir / ("cube" + std::to_string(g) + "_top.csv"));
        for (int b = 0; b < config.breadth; ++b) {
            for (int w = 0; w < config.width; ++w) {
                if (w > 0) csv << ",";
                csv << top[static_cast<std::size_t>(b)][static_cast<std::size_t>(w)];
            }
            csv << "\n";
        }

        for (int d = 0; d < config.depth; ++d) {
            auto pgm = open_out(dir / ("cube" + std::to_string(g) + "_depth" +
                                       std::to_string(d) + ".pgm"));
            pgm << "P2\n" << config.width << " " << config.breadth << "\n255\n";
            for (int b = 0; b < config.breadth; ++b) {
                for (int w = 0; w < config.width; ++w) {
                    if (w > 0) pgm << " ";
                    pgm << (visits[cell_index(config, g, w, b, d)] > 0 ? 0 : 255);
                }
                pgm << "\n";
            }
        }
    }
}

void write_visit_counts(const CubeConfig& config, std::span<const std::uint64_t> visits,
                        const std::filesystem::path& file) {
    auto out = open_out(file);
    out << "g,w,b,d,count\n";
    for (int g = 0; g < config.cubes; ++g) {
        for (int w = 0; w < config.width; ++w) {
            for (int b = 0; b < config.breadth; ++b) {
                for (int d = 0; d < config.depth; ++d) {
                    std::uint64_t c = visits[cell_index(config, g, w, b, d)];
                    if (c > 0) {
                        out << g << "," << w << "," << b << "," << d << "," << c << "\n";
                    }
                }
            }
        }
    }
}

std::vector<std::uint64_t> read_visit_counts(const CubeConfig& config,
                                             const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file.string());
    std::vector<std::uint64_t> visits(static_cast<std::size_t>(config.total_cells()), 0);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        int vals[4] = {0, 0, 0, 0};
        for (int& val : vals) {
            if (!std::getline(row, field, ',')) throw std::runtime_error("bad visits row: " + line);
            val = std::stoi(field);
        }
        if (!std::getline(row, field)) throw std::runtime_error("bad visits row: " + line);
        if (vals[0] < 0 || vals[0] >= config.cubes || vals[1] < 0 || vals[1] >= config.width ||
            vals[2] < 0 || vals[2] >= config.breadth || vals[3] < 0 || vals[3] >= config.depth) {
            throw std::runtime_error("visits row out of bounds: " + line);
        }
        visits[cell_index(config, vals[0], vals[1], vals[2], vals[3])] =
            std::stoull(field);
    }
    return visits;
}

}  // namespace rlx
