#include "zetasum/composition.hpp"

#include <numeric>
#include <stdexcept>

#include "zetasum/errors.hpp"

namespace zetasum {

namespace {
void check_parts(const std::vector<int>& parts) {
    for (int p : parts)
        if (p < 1) throw std::domain_error("composition parts must be positive");
}
} // namespace

Composition::Composition(std::initializer_list<int> p) : parts(p) { check_parts(parts); }

Composition::Composition(std::vector<int> p) : parts(std::move(p)) { check_parts(parts); }

int Composition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Composition ones(int m) {
    Composition s;
    s.parts.assign(static_cast<size_t>(m < 0 ? 0 : m), 1);
    return s;
}

Composition hook_index(int head, int m) {
    Composition s;
    s.parts.reserve(static_cast<size_t>(m) + 1);
    s.parts.push_back(head);
    for (int i = 0; i < m; ++i) s.parts.push_back(1);
    check_parts(s.parts);
    return s;
}

Composition concat(const Composition& a, const Composition& b) {
    Composition s = a;
    s.parts.insert(s.parts.end(), b.parts.begin(), b.parts.end());
    return s;
}

std::string format_composition(const Composition& s) {
    std::string out;
    size_t i = 0;
    while (i < s.parts.size()) {
        size_t j = i;
        while (j < s.parts.size() && s.parts[j] == s.parts[i]) ++j;
        size_t run = j - i;
        if (!out.empty()) out += ",";
        if (run >= 3) {
            out += "{" + std::to_string(s.parts[i]) + "}_" + std::to_string(run);
        } else {
            out += std::to_string(s.parts[i]);
            for (size_t r = 1; r < run; ++r) out += "," + std::to_string(s.parts[i]);
        }
        i = j;
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_spaces() {
        while (!done() && text[pos] == ' ') ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    long read_int() {
        skip_spaces();
        size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected a number");
        if (pos - start > 6) {
            pos = start;
            fail("number too large");
        }
        return std::stol(text.substr(start, pos - start));
    }

    void expect(char c) {
        skip_spaces();
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
};

} // namespace

Composition parse_composition(const std::string& text) {
    Cursor cur{text};
    cur.skip_spaces();
    if (cur.done()) cur.fail("empty composition");
    Composition s;
    while (true) {
        cur.skip_spaces();
        if (!cur.done() && cur.peek() == '{') {
            cur.expect('{');
            size_t part_pos = cur.pos;
            long part = cur.read_int();
            if (part < 1) {
                cur.pos = part_pos;
                cur.fail("parts must be positive");
            }
            cur.expect('}');
            cur.expect('_');
            size_t count_pos = cur.pos;
            long count = cur.read_int();
            if (count < 1) {
                cur.pos = count_pos;
                cur.fail("repetition count must be positive");
            }
            for (long r = 0; r < count; ++r) s.parts.push_back(static_cast<int>(part));
        } else {
            size_t part_pos = cur.pos;
            long part = cur.read_int();
            if (part < 1) {
                cur.pos = part_pos;
                cur.fail("parts must be positive");
            }
            s.parts.push_back(static_cast<int>(part));
        }
        cur.skip_spaces();
        if (cur.done()) break;
        cur.expect(',');
    }
    return s;
}

} // namespace zetasum
