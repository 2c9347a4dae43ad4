#include "hxplain/render.hpp"

#include "hxplain/env/connect4.hpp"
#include "hxplain/env/drone_coverage.hpp"
#include "hxplain/env/frozen_lake.hpp"

#include <sstream>

namespace hxplain::render {

namespace {

std::string value_text(const Value& v) {
    if (std::holds_alternative<std::int64_t>(v))
        return std::to_string(std::get<std::int64_t>(v));
    if (std::holds_alternative<Cell>(v)) {
        Cell c = std::get<Cell>(v);
        return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    }
    return std::get<std::string>(v);
}

std::vector<std::string> state_grid(const TransitionModel& model,
                                    const State& s) {
    std::vector<std::string> lines;
    if (const auto* fl = dynamic_cast<const fl::FlModel*>(&model)) {
        Cell p = s.as_cell(0);
        for (int x = 0; x < fl->map().height; ++x) {
            std::string line;
            for (int y = 0; y < fl->map().width; ++y) {
                Cell c{x, y};
                char ch = '.';
                if (fl->map().holes.contains(c)) ch = 'H';
                if (c == fl->map().goal) ch = 'G';
                if (c == p) ch = 'A';
                line += ch;
            }
            lines.push_back(line);
        }
    } else if (dynamic_cast<const c4::C4Model*>(&model)) {
        c4::Board b = c4::Board::from_state(s);
        for (int r = 0; r < c4::kRows; ++r) {
            std::string line;
            for (int c = 0; c < c4::kCols; ++c)
                line += b.at(r, c) == c4::Agent      ? 'A'
                        : b.at(r, c) == c4::Opponent ? 'O'
                                                     : '.';
            lines.push_back(line);
        }
    } else if (const auto* dc = dynamic_cast<const dc::DcModel*>(&model)) {
        Cell p = dc->position(s);
        auto others = dc->visible_drones(s);
        for (int x = 0; x < dc::kSize; ++x) {
            std::string line;
            for (int y = 0; y < dc::kSize; ++y) {
                Cell c{x, y};
                char ch = '.';
                if (dc->trees().contains(c)) ch = 'T';
                for (Cell o : others)
                    if (o == c) ch = 'D';
                if (c == p) ch = dc->crashed(s) ? 'X' : 'E';
                line += ch;
            }
            lines.push_back(line);
        }
    } else {
        std::string line;
        for (const Value& v : s.values()) {
            if (!line.empty()) line += " ";
            line += value_text(v);
        }
        lines.push_back(line);
    }
    return lines;
}

} // namespace

std::string predicate_text(const Predicate& p, const SchemaPtr& schema) {
    if (!p.is_dnf()) return p.native().env + ":" + p.native().name;
    if (p.terms().empty()) return "FALSE";
    std::string out;
    for (const Term& t : p.terms()) {
        if (!out.empty()) out += " OR ";
        if (t.literals().empty()) {
            out += "TRUE";
            continue;
        }
        std::string conj;
        for (const Literal& l : t.literals()) {
            if (!conj.empty()) conj += " AND ";
            conj += "(" + schema->feature(l.feature).name + "=" +
                    value_text(l.value) + ")";
        }
        out += conj;
    }
    return out;
}

std::string ascii(const TransitionModel& model, const History& h,
                  const Explanation* explanation) {
    std::vector<int> marked;
    if (explanation)
        for (const BhxpStep& st : explanation->steps) marked.push_back(st.index);

    std::ostringstream os;
    for (std::size_t i = 0; i < h.states.size(); ++i) {
        os << "s" << i;
        if (i < h.actions.size()) {
            os << "  " << model.action_name(h.actions[i]);
            for (int m : marked)
                if (m == int(i)) os << "  <== important";
        }
        os << "\n";
        for (const std::string& line : state_grid(model, h.states[i]))
            os << "  " << line << "\n";
    }
    if (explanation) {
        os << "\nsteps:\n";
        for (const BhxpStep& st : explanation->steps) {
            os << "  t=" << st.index << " "
               << model.action_name(st.action)
               << " score=" << st.score.to_string() << " window=["
               << st.window_lo << "," << st.window_hi << ")"
               << "\n    studied: "
               << predicate_text(st.predicate_studied, h.schema)
               << "\n    next:    "
               << predicate_text(st.predicate_next, h.schema) << "\n";
        }
        os << "termination: "
           << (explanation->termination == Termination::ZeroUtility
                   ? "zero_utility"
                   : "reached_start")
           << "\n";
    }
    return os.str();
}

std::string svg(const TransitionModel& model, const History& h,
                const Explanation* explanation) {
    std::string body = ascii(model, h, explanation);
    std::ostringstream os;
    std::vector<std::string> lines;
    std::istringstream is(body);
    for (std::string line; std::getline(is, line);) lines.push_back(line);

    int width = 600;
    int height = 16 * int(lines.size()) + 20;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    int y = 16;
    for (const std::string& line : lines) {
        std::string escaped;
        for (char c : line) {
            switch (c) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            default: escaped += c;
            }
        }
        os << "  <text x=\"10\" y=\"" << y
           << "\" font-family=\"monospace\" font-size=\"12\">" << escaped
           << "</text>\n";
        y += 16;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace hxplain::render
