#ifndef EVENSETS_REPORT_HPP
#define EVENSETS_REPORT_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "evensets/catalog.hpp"
#include "evensets/doublecover.hpp"
#include "evensets/evenset.hpp"
#include "evensets/fibers.hpp"

namespace evensets {

/// ANSI color wrapper. Plain unless explicitly enabled; NO_COLOR always wins.
class Palette {
public:
    static Palette plain() { return Palette(false); }
    static Palette from_env(bool to_tty);

    std::string ok(const std::string& s) const { return wrap("\033[32m", s); }
    std::string bad(const std::string& s) const { return wrap("\033[31m", s); }
    std::string head(const std::string& s) const { return wrap("\033[1m", s); }

private:
    explicit Palette(bool on) : on_(on) {}
    std::string wrap(const char* code, const std::string& s) const {
        return on_ ? code + s + "\033[0m" : s;
    }
    bool on_;
};

void render_even_set(std::ostream& os, const EvenSetReport& r, const Palette& p);
void render_cover(std::ostream& os, const CoverClassification& c, const Palette& p);
void render_fiber_config(std::ostream& os, const FiberConfig& f, const Palette& p);
void render_validation(std::ostream& os, const ValidationReport& v, const Palette& p);
void render_fiber_class(std::ostream& os, const FiberClass& fc, const Palette& p);
void render_catalog_entry(std::ostream& os, const CatalogEntry& e, const Palette& p);

nlohmann::json json_even_set(const EvenSetReport& r);
nlohmann::json json_cover(const CoverClassification& c);
nlohmann::json json_fiber_config(const FiberConfig& f);
nlohmann::json json_validation(const ValidationReport& v);
nlohmann::json json_fiber_class(const FiberClass& fc);
nlohmann::json json_kodaira(const KodairaType& t);
nlohmann::json json_catalog_entry(const CatalogEntry& e);

} // namespace evensets

#endif
