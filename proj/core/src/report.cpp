#include <modforms/report.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace modforms {

namespace {

void sort_records(std::vector<CaseRecord>& records) {
    std::sort(records.begin(), records.end(), [](const CaseRecord& a, const CaseRecord& b) {
        return std::tie(a.wtf, a.wtg_residue, a.n) < std::tie(b.wtf, b.wtg_residue, b.n);
    });
}

} // namespace

int residue_representative(int r) {
    if (r == 0) return 12;
    if (r == 2) return 14;
    return r;
}

std::string records_csv(std::vector<CaseRecord> records) {
    sort_records(records);
    std::ostringstream os;
    os << "wtf,wtg_residue,n,dim_relation,theorem_case\n";
    for (const auto& rec : records)
        os << rec.wtf << ',' << rec.wtg_residue << ',' << rec.n << ','
           << dim_relation_name(rec.dim_relation) << ','
           << theorem_case_name(rec.theorem_case) << '\n';
    return os.str();
}

std::string records_table(std::vector<CaseRecord> records) {
    sort_records(records);
    std::ostringstream os;
    os << std::left << std::setw(6) << "wtf" << std::setw(13) << "wtg_residue"
       << std::setw(5) << "n" << std::setw(17) << "dim_relation"
       << "theorem_case" << '\n';
    for (const auto& rec : records)
        os << std::left << std::setw(6) << rec.wtf << std::setw(13) << rec.wtg_residue
           << std::setw(5) << rec.n << std::setw(17) << dim_relation_name(rec.dim_relation)
           << theorem_case_name(rec.theorem_case) << '\n';
    os << records.size() << " classes\n";
    return os.str();
}

std::string records_svg(std::vector<CaseRecord> records) {
    // draw big circles first so the stacked small ones remain visible
    std::sort(records.begin(), records.end(), [](const CaseRecord& a, const CaseRecord& b) {
        return std::tie(a.n, a.wtf, a.wtg_residue) > std::tie(b.n, b.wtf, b.wtg_residue);
    });

    const int width = 800, height = 600;
    const int left = 70, right = 30, top = 30, bottom = 60;
    const double x0 = 4, x1 = 24, y0 = 4, y1 = 14;
    auto xpos = [&](double wtf) {
        return left + (wtf - x0) / (x1 - x0) * (width - left - right);
    };
    auto ypos = [&](double wtg) {
        return height - bottom - (wtg - y0) / (y1 - y0) * (height - top - bottom);
    };
    static const char* shades[5] = {"#202020", "#4d4d4d", "#7a7a7a", "#a7a7a7", "#d4d4d4"};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"" << width << "\" height=\"" << height << "\" "
          "viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
       << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
       << height - bottom << "\" stroke=\"black\"/>\n";
    for (int w = 4; w <= 24; w += 2)
        os << "<text x=\"" << xpos(w) << "\" y=\"" << height - bottom + 20
           << "\" font-size=\"12\" text-anchor=\"middle\">" << w << "</text>\n";
    for (int w = 4; w <= 14; w += 2)
        os << "<text x=\"" << left - 10 << "\" y=\"" << ypos(w) + 4
           << "\" font-size=\"12\" text-anchor=\"end\">" << w << "</text>\n";
    os << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 15
       << "\" font-size=\"14\" text-anchor=\"middle\">wt(f)</text>\n"
       << "<text x=\"20\" y=\"" << (top + height - bottom) / 2
       << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << (top + height - bottom) / 2 << ")\">wt(g) mod 12 (smallest representative)</text>\n";

    for (const auto& rec : records) {
        const int radius = 3 + 2 * rec.n;
        const int shade = std::min(4, (rec.n - 1) * 5 / 11);
        os << "<circle cx=\"" << xpos(rec.wtf) << "\" cy=\""
           << ypos(residue_representative(rec.wtg_residue)) << "\" r=\"" << radius
           << "\" fill=\"" << shades[shade] << "\" fill-opacity=\"0.85\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace modforms
