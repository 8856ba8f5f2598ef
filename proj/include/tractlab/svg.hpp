#ifndef TRACTLAB_SVG_HPP
#define TRACTLAB_SVG_HPP

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace tractlab {

// Minimal self-contained SVG canvas; emits no external references.
class SvgCanvas {
public:
    SvgCanvas(double width, double height) : width_(width), height_(height) {}

    void rect(double x, double y, double w, double h, const std::string& stroke,
              const std::string& fill = "none") {
        body_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
              << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0) {
        body_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
              << "\" stroke=\"" << stroke << "\" stroke-width=\"" << stroke_width << "\"/>\n";
    }

    void circle(double cx, double cy, double r, const std::string& fill) {
        body_ << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill
              << "\"/>\n";
    }

    void polyline(const std::vector<std::array<double, 2>>& pts, const std::string& stroke,
                  double stroke_width = 1.0, bool close = false) {
        if (pts.empty()) return;
        body_ << (close ? "<polygon" : "<polyline") << " points=\"";
        for (const auto& p : pts) body_ << p[0] << ',' << p[1] << ' ';
        body_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << stroke_width
              << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, double size = 12.0,
              const std::string& fill = "black") {
        body_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
              << "\" font-family=\"sans-serif\" fill=\"" << fill << "\">" << escape(s)
              << "</text>\n";
    }

    std::string render() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width_ << ' '
            << height_ << "\">\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                default: out += c;
            }
        }
        return out;
    }

    double width_, height_;
    std::ostringstream body_;
};

// Maps data coordinates into a pixel box, y increasing upward.
struct PlotFrame {
    double px, py, pw, ph;                  // pixel box (top-left origin)
    double xmin, xmax, ymin, ymax;          // data range

    double x(double v) const { return px + (v - xmin) / (xmax - xmin) * pw; }
    double y(double v) const { return py + ph - (v - ymin) / (ymax - ymin) * ph; }
};

}  // namespace tractlab

#endif
