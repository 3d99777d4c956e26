#include "reslat/report.hpp"

#include <sstream>

namespace reslat {

bool LawReport::passed() const {
    for (const LawEntry& e : entries) {
        if (!e.pass) return false;
    }
    return true;
}

const LawEntry* LawReport::find(const std::string& name) const {
    for (const LawEntry& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

void LawReport::add(LawEntry entry) { entries.push_back(std::move(entry)); }

void LawReport::append(const LawReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    degenerate = degenerate || other.degenerate;
}

std::string render_witness(const std::vector<int>& witness) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ",";
        os << witness[i];
    }
    os << ")";
    return os.str();
}

std::string render_report(const LawReport& report) {
    std::ostringstream os;
    if (report.degenerate) os << "NOTE degenerate carrier of size 1\n";
    for (const LawEntry& e : report.entries) {
        os << "LAW " << e.name;
        if (e.pass) {
            os << " PASS";
        } else {
            os << " FAIL witness=" << render_witness(e.witness);
        }
        os << "\n";
        if (!e.note.empty()) os << "NOTE " << e.name << " " << e.note << "\n";
    }
    return os.str();
}

}  // namespace reslat
