#include "sqcomp/sequence_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace sqcomp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

ComplementCandidate read_sequence(std::istream& in) {
    std::vector<u64> elements;
    std::string label;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_label = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            if (seen_label || !elements.empty())
                throw ParseError(line_no, "label line must precede all elements and appear once");
            label = std::string(trim(line.substr(1)));
            seen_label = true;
            continue;
        }
        u64 value = 0;
        const auto* first = line.data();
        const auto* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError(line_no, "value exceeds 64-bit range: '" + std::string(line) + "'");
        if (ec != std::errc{} || ptr != last)
            throw ParseError(line_no, "expected a non-negative decimal integer, got '" + std::string(line) + "'");
        if (!elements.empty() && value <= elements.back())
            throw ParseError(line_no, "elements must be strictly increasing (" + std::to_string(elements.back()) +
                                          " then " + std::to_string(value) + ")");
        elements.push_back(value);
    }
    return ComplementCandidate(std::move(elements), std::move(label));
}

void write_sequence(std::ostream& out, const ComplementCandidate& w) {
    if (!w.label().empty())
        out << "# " << w.label() << '\n';
    for (u64 v : w.elements())
        out << v << '\n';
}

ComplementCandidate load_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open sequence file " + path.string());
    return read_sequence(in);
}

void save_sequence(const std::filesystem::path& path, const ComplementCandidate& w) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write sequence file " + path.string());
    write_sequence(out, w);
}

}  // namespace sqcomp
