#include "dfam/family_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace dfam {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

SetFamily parse_family(std::istream& in) {
    std::string line;
    int n = -1;
    bool saw_set_line = false;
    std::vector<Mask> members;
    std::unordered_set<Mask> seen;
    std::vector<std::vector<int>> raw; // defer range checks until n is known
    int max_elem = 0;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!saw_set_line && n < 0 && tok == "n") {
            long long v;
            if (!(ls >> v) || v < 1 || v > MAX_GROUND)
                throw FamilyParseError("line " + std::to_string(lineno) + ": bad ground size");
            std::string extra;
            if (ls >> extra)
                throw FamilyParseError("line " + std::to_string(lineno) + ": trailing tokens after header");
            n = static_cast<int>(v);
            continue;
        }
        saw_set_line = true;
        std::vector<int> elems;
        if (tok != "-") {
            std::istringstream again(line);
            long long e;
            while (again >> e) {
                if (e < 1 || e > MAX_GROUND)
                    throw FamilyParseError("line " + std::to_string(lineno) + ": element out of range");
                elems.push_back(static_cast<int>(e));
                max_elem = std::max(max_elem, static_cast<int>(e));
            }
            if (!again.eof())
                throw FamilyParseError("line " + std::to_string(lineno) + ": non-integer token");
            if (elems.empty())
                throw FamilyParseError("line " + std::to_string(lineno) + ": empty set must be written as '-'");
        }
        Mask m = 0;
        for (int e : elems) {
            Mask b = bit_of(e);
            if (m & b)
                throw FamilyParseError("line " + std::to_string(lineno) + ": repeated element " + std::to_string(e));
            m |= b;
        }
        if (!seen.insert(m).second)
            throw FamilyParseError("line " + std::to_string(lineno) + ": duplicate set");
        members.push_back(m);
        raw.push_back(std::move(elems));
    }

    if (n < 0) {
        if (max_elem == 0)
            throw FamilyParseError("cannot infer ground size: no header and no elements");
        n = max_elem;
    } else if (max_elem > n) {
        throw FamilyParseError("element " + std::to_string(max_elem) + " exceeds declared ground size " +
                               std::to_string(n));
    }
    return SetFamily::from_masks(n, std::move(members));
}

SetFamily parse_family_text(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

SetFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FamilyParseError("cannot open family file: " + path);
    return parse_family(in);
}

void write_family(std::ostream& out, const SetFamily& F, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n " << F.n() << "\n";
    for (Mask m : F.masks()) out << format_set(m) << "\n";
}

std::string family_to_text(const SetFamily& F, const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_family(out, F, comments);
    return out.str();
}

} // namespace dfam
