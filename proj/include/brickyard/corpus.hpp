#pragma once

// Corpus ingestion: line-oriented graph6/sparse6 fixture files, plain or
// gzip-compressed (zlib reads both transparently), plus the doubled-edge
// multigraph corpus builder and a batch-parallel scan over corpus lines.

#include <zlib.h>

#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>

#include "brickyard/formats.hpp"

namespace brickyard {

class CorpusReader {
public:
    explicit CorpusReader(const std::string& path)
        : file_(gzopen(path.c_str(), "rb")), path_(path) {
        if (file_ == nullptr)
            throw std::runtime_error("cannot open corpus file: " + path);
    }
    ~CorpusReader() {
        if (file_ != nullptr) gzclose(file_);
    }
    CorpusReader(const CorpusReader&) = delete;
    CorpusReader& operator=(const CorpusReader&) = delete;

    // next nonempty line, without the newline; false at end of file
    bool next(std::string& line) {
        line.clear();
        char buf[4096];
        for (;;) {
            if (gzgets(file_, buf, sizeof buf) == nullptr) {
                if (!gzeof(file_)) {
                    int err = 0;
                    throw std::runtime_error("error reading " + path_ + ": " +
                                             gzerror(file_, &err));
                }
                return !line.empty();
            }
            line += buf;
            if (!line.empty() && line.back() == '\n') {
                line.pop_back();
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;  // skip blank lines
                ++line_number_;
                return true;
            }
        }
    }
    long line_number() const { return line_number_; }
    const std::string& path() const { return path_; }

private:
    gzFile file_;
    std::string path_;
    long line_number_ = 0;
};

inline std::vector<MultiGraph> load_corpus(const std::string& path,
                                           GraphFormat fmt = GraphFormat::autodetect) {
    std::vector<MultiGraph> out;
    CorpusReader reader(path);
    std::string line;
    while (reader.next(line)) out.push_back(parse_graph(line, fmt));
    return out;
}

// One multigraph per edge of g, with that edge doubled. Exercises the
// parallel-edge cases; the new copy is appended last so original ids hold.
inline std::vector<MultiGraph> doubled_edge_variants(const MultiGraph& g) {
    std::vector<MultiGraph> out;
    out.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        MultiGraph d = g;
        d.add_edge(u, v);
        out.push_back(std::move(d));
    }
    return out;
}

// Scan a corpus file with `jobs` workers. Each worker owns an Acc and gets
// batches of (line, index); partial accumulators merge left-to-right in
// worker order, so make merging order-insensitive or sort afterwards.
template <class Acc, class PerLine>
Acc scan_corpus(const std::string& path, int jobs, PerLine per_line) {
    CorpusReader reader(path);
    if (jobs <= 1) {
        Acc acc;
        std::string line;
        long index = 0;
        while (reader.next(line)) per_line(acc, line, index++);
        return acc;
    }

    constexpr std::size_t kBatch = 256;
    std::mutex mu;
    long next_index = 0;
    bool eof = false;

    std::vector<Acc> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            std::vector<std::string> batch;
            long base = 0;
            for (;;) {
                batch.clear();
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (eof) return;
                    base = next_index;
                    std::string line;
                    while (batch.size() < kBatch && reader.next(line))
                        batch.push_back(line);
                    next_index += static_cast<long>(batch.size());
                    if (batch.size() < kBatch) eof = true;
                }
                for (std::size_t i = 0; i < batch.size(); ++i)
                    per_line(partial[static_cast<std::size_t>(w)], batch[i],
                             base + static_cast<long>(i));
                if (batch.empty()) return;
            }
        });
    }
    for (auto& t : workers) t.join();
    Acc acc = std::move(partial[0]);
    for (std::size_t w = 1; w < partial.size(); ++w) acc.merge(std::move(partial[w]));
    return acc;
}

}  // namespace brickyard
