#pragma once

#include <stdexcept>
#include <string>

namespace fullerene {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FULLERENE_DEFINE_ERROR(Name)            \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  };

// plane graphs and fullerenes
FULLERENE_DEFINE_ERROR(InvalidRotation)
FULLERENE_DEFINE_ERROR(AsymmetricAdjacency)
FULLERENE_DEFINE_ERROR(Disconnected)
FULLERENE_DEFINE_ERROR(NonzeroGenus)
FULLERENE_DEFINE_ERROR(NotCubic)
FULLERENE_DEFINE_ERROR(WrongPentagonCount)
FULLERENE_DEFINE_ERROR(NoSpiral)

// spirals and generation
FULLERENE_DEFINE_ERROR(InvalidSpiralCode)
FULLERENE_DEFINE_ERROR(UnsupportedN)

// goldberg
FULLERENE_DEFINE_ERROR(InvalidCoxeterCoords)
FULLERENE_DEFINE_ERROR(InvalidD)

// patches and caps
FULLERENE_DEFINE_ERROR(InvalidPatch)
FULLERENE_DEFINE_ERROR(OddK)
FULLERENE_DEFINE_ERROR(NotACapBoundary)
FULLERENE_DEFINE_ERROR(NotACap)
FULLERENE_DEFINE_ERROR(PentagonOnBoundary)
FULLERENE_DEFINE_ERROR(NotL0Cap)
FULLERENE_DEFINE_ERROR(ZeroParameter)
FULLERENE_DEFINE_ERROR(BoundaryMismatch)
FULLERENE_DEFINE_ERROR(BelowThreshold)
FULLERENE_DEFINE_ERROR(TooFewPentagons)
FULLERENE_DEFINE_ERROR(InternalVerificationFailure)

// planar_code
FULLERENE_DEFINE_ERROR(BadHeader)
FULLERENE_DEFINE_ERROR(TruncatedRecord)
FULLERENE_DEFINE_ERROR(InvalidNeighborIndex)

#undef FULLERENE_DEFINE_ERROR

/// Face of the wrong size in a fullerene candidate.
class BadFaceSize : public Error {
 public:
  BadFaceSize(std::size_t face, std::size_t size)
      : Error("BadFaceSize: face " + std::to_string(face) + " has size " +
              std::to_string(size)),
        face_(face),
        size_(size) {}
  std::size_t face() const noexcept { return face_; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t face_;
  std::size_t size_;
};

/// A face-size sequence that does not wind up into a closed triangulation.
class WindupFailure : public Error {
 public:
  explicit WindupFailure(std::size_t step)
      : Error("WindupFailure: spiral cannot be continued at face " +
              std::to_string(step)),
        step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace fullerene
