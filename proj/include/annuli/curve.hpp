#pragma once
// Parametric curves t -> (x(t), y(t)) with Laurent components, their exponent
// profiles at t = oo and t = 0, the four normal-form types, handsomeness, the
// dimension of the curve space and the normalizing automorphism search.
#include <optional>
#include <string>
#include <vector>

#include "annuli/laurent.hpp"

namespace annuli {

struct Curve {
  Laurent x, y;
  long field() const;
  std::string str() const;
  friend bool operator==(const Curve& a, const Curve& b) { return a.x == b.x && a.y == b.y; }
};

// Raw exponents plus the signed view p = topX, r = -botX, q = topY, s = -botY.
struct Profile {
  int topX = 0, botX = 0, topY = 0, botY = 0;
  Scalar lcTopX, lcBotX, lcTopY, lcBotY;
  long p() const { return topX; }
  long r() const { return -botX; }
  long q() const { return topY; }
  long s() const { return -botY; }
  long pp() const;  // gcd(|p|,|q|)
  long rp() const;  // gcd(|r|,|s|)
};

Profile exponent_profile(const Curve& c);  // ConstantComponent

enum class TypeTag { PlusPlus, Mixed, MinusPlus, MinusMinus };
std::string type_name(TypeTag t);

// rows of the type table checked on the signed profile as given (no moves)
std::optional<TypeTag> type_of(const Profile& pr);
bool handsome(const Profile& pr, TypeTag t);
int type_epsilon(TypeTag t);
long type_k(const Profile& pr, TypeTag t);
long dim_curv(const Profile& pr, TypeTag t);

struct Move {
  enum Kind { AddToX, AddToY, Linear, ScaleT, InvertT } kind = InvertT;
  QPoly poly;       // AddToX: x += poly(y); AddToY: y += poly(x)
  Scalar m[4];      // Linear: (x,y) -> (m0 x + m1 y, m2 x + m3 y)
  Scalar lambda;    // ScaleT: t -> lambda t
  static Move add_to_x(const QPoly& p);
  static Move add_to_y(const QPoly& p);
  static Move swap();
  static Move linear(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
  static Move scale_t(const Scalar& l);
  static Move invert_t();
  std::string str() const;
};

Curve apply_automorphism(const Curve& c, const Move& mv);
Curve apply_all(Curve c, const std::vector<Move>& log);

struct Primitivity {
  enum Kind { Primitive, PowerCover, Suspect } kind = Primitive;
  long degree = 1;
};
Primitivity detect_nonprimitive(const Curve& c);

enum class ShapeClass { Proper, NonProper, ConstantComponent };

struct Normalized {
  Curve curve;            // the normal form (all invariants are computed on it)
  std::vector<Move> log;  // moves carrying the input to the normal form
  Profile profile;
  std::optional<TypeTag> type;     // empty when no row of the table fits
  bool handsome = false;
  ShapeClass shape = ShapeClass::Proper;
  std::vector<TypeTag> alternates;  // other admissible handsome tags reachable by swap/inversion
};

// Reduce to a handsome curve of one of the four types when possible.
// Throws NonTermination if the move cap 4(p+q+r+s) is exceeded.
Normalized normalize(const Curve& c);
Normalized classify(const Curve& c);  // same, throws Unclassifiable when no type fits

// 2*delta_max from a typed profile
long two_delta_max(const Profile& pr);

}  // namespace annuli
