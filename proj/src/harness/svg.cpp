#include "cubeops/harness/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cubeops/json_io.hpp"

namespace cubeops::harness {

namespace {

constexpr double kSide = 400.0;
constexpr double kMargin = 20.0;
constexpr double kRow = 40.0;

const std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void check_dim(std::size_t dim)
{
    if (dim == 0 || dim > 2) {
        throw std::invalid_argument("rendering supports dimensions 1 and 2, got " + std::to_string(dim));
    }
}

class Canvas {
public:
    Canvas(std::size_t dim, std::size_t rows) : dim_(dim), rows_(rows == 0 ? 1 : rows)
    {
        check_dim(dim);
        width_ = kSide + 2 * kMargin;
        height_ = dim == 2 ? kSide + 2 * kMargin : static_cast<double>(rows_) * kRow + 2 * kMargin;
    }

    double x(const Rational& v) const { return kMargin + kSide * v.to_double(); }
    double y2(const Rational& v) const { return kMargin + kSide * (1.0 - v.to_double()); }
    double row_top(std::size_t row) const { return kMargin + static_cast<double>(row) * kRow + 8.0; }

    /// Rectangle r; in dimension 1 it is drawn in `row`.
    void rect(const Rect& r, const std::string& style, std::size_t row = 0)
    {
        double x0 = x(r[0].lo());
        double x1 = x(r[0].hi());
        double y0 = row_top(row);
        double y1 = y0 + kRow - 16.0;
        if (dim_ == 2) {
            y0 = y2(r[1].hi());
            y1 = y2(r[1].lo());
        }
        out_ << "  <rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0) << "\" height=\""
             << num(y1 - y0) << "\" " << style << "/>\n";
    }

    void dot(const Coords& p, const std::string& color, std::size_t row = 0)
    {
        const double cx = x(p[0]);
        const double cy = dim_ == 2 ? y2(p[1]) : row_top(row) + (kRow - 16.0) / 2;
        out_ << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }

    void label(const Rect& r, const std::string& text, std::size_t row = 0)
    {
        double lx = x(r[0].lo()) + 4.0;
        double ly = row_top(row) + 14.0;
        if (dim_ == 2) {
            ly = y2(r[1].hi()) + 14.0;
        }
        out_ << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly) << "\" font-family=\"monospace\" font-size=\"11\">"
             << text << "</text>\n";
    }

    void caption(const std::string& text)
    {
        out_ << "  <text x=\"" << num(kMargin) << "\" y=\"" << num(kMargin - 6.0)
             << "\" font-family=\"monospace\" font-size=\"11\">" << text << "</text>\n";
    }

    std::string finish(const std::string& title) const
    {
        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\"" << num(height_)
            << "\" viewBox=\"0 0 " << num(width_) << " " << num(height_) << "\">\n";
        svg << "  <title>" << title << "</title>\n";
        svg << "  <rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
            << "\" fill=\"white\"/>\n";
        svg << frame() << out_.str() << "</svg>\n";
        return svg.str();
    }

private:
    std::string frame() const
    {
        std::ostringstream f;
        for (std::size_t row = 0; row < (dim_ == 2 ? 1 : rows_); ++row) {
            const double y0 = dim_ == 2 ? kMargin : row_top(row);
            const double h = dim_ == 2 ? kSide : kRow - 16.0;
            f << "  <rect x=\"" << num(kMargin) << "\" y=\"" << num(y0) << "\" width=\"" << num(kSide)
              << "\" height=\"" << num(h) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
        return f.str();
    }

    std::size_t dim_;
    std::size_t rows_;
    double width_ = 0;
    double height_ = 0;
    std::ostringstream out_;
};

std::string outline(const char* color, double opacity)
{
    return std::string("fill=\"") + color + "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"";
}

}  // namespace

std::string render_configuration(const Configuration& c)
{
    Canvas canvas(c.dim(), 1);
    for (std::size_t i = 0; i < c.arity(); ++i) {
        const Rect r = c[i].image();
        canvas.rect(r, outline(kPalette[i % kPalette.size()], 0.25));
        canvas.label(r, std::to_string(i));
    }
    canvas.caption("configuration of arity " + std::to_string(c.arity()));
    return canvas.finish("configuration");
}

std::string render_expansion(const LittleCube& c, const Coords& p, const std::vector<Rational>& times)
{
    const ExpansionPath path(c, p);
    Canvas canvas(c.dim(), c.dim() == 1 ? times.size() : 1);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const Rect r = path.at(times[k]).image();
        const std::size_t row = c.dim() == 1 ? k : 0;
        canvas.rect(r, outline(kPalette[k % kPalette.size()], 0.08), row);
        canvas.label(r, "τ=" + times[k].to_string(), row);
        canvas.dot(p, "black", row);
    }
    canvas.caption("expansion about p = " + to_string(p));
    return canvas.finish("expansion");
}

std::string render_support(std::size_t dim, const std::optional<Rect>& support, const std::string& label)
{
    Canvas canvas(dim, 1);
    if (support) {
        canvas.rect(*support, "fill=\"#888888\" fill-opacity=\"0.5\" stroke=\"black\" stroke-width=\"1\"");
        canvas.dot(rect_center(*support), "#d62728");
    }
    canvas.caption(label);
    return canvas.finish("support");
}

std::string render_json(const Json& input)
{
    const std::string kind = input.at("kind").get<std::string>();
    if (kind == "configuration") {
        return render_configuration(config_from_json(input.at("config")));
    }
    if (kind == "expansion") {
        std::vector<Rational> times;
        for (const auto& t : input.at("times")) {
            times.push_back(rational_from_json(t));
        }
        return render_expansion(cube_from_json(input.at("c")), coords_from_json(input.at("p")), times);
    }
    if (kind == "support") {
        const CnElem<UnitPoint> f = unit_element_from_json(input.at("element"));
        check_dim(f.dim());
        const SupportResult s = f.support();
        if (s.is_exact()) {
            return render_support(f.dim(), s.rect(), "exact support");
        }
        const std::size_t budget = input.value("budget", kDefaultOracleBudget);
        return render_support(f.dim(), csupp_oracle(f, budget).rect, "oracle support, budget " + std::to_string(budget));
    }
    throw std::invalid_argument("unknown render kind: " + kind);
}

}  // namespace cubeops::harness
