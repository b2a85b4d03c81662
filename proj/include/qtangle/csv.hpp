// csv.hpp — deterministic CSV output: '#'-prefixed metadata lines, one header
// row, then data rows with 17-significant-digit doubles (round-trip exact).

#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtangle {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    }

    void comment(const std::string& line) { out_ << "# " << line << "\n"; }

    void header(const std::vector<std::string>& cols) { write_row(cols); }

    void row(const std::vector<std::string>& cells) { write_row(cells); }

    void close() {
        out_.close();
        if (!out_) throw std::runtime_error("CsvWriter: write failure on close");
    }

private:
    void write_row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
        if (!out_) throw std::runtime_error("CsvWriter: write failure");
    }

    std::ofstream out_;
};

}  // namespace qtangle
