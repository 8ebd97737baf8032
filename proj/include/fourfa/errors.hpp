#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fourfa {

/// Base of every failure raised by the library. Messages never carry secrets.
class Error : public std::runtime_error
   {
   public:
      using std::runtime_error::runtime_error;
   };

#define FOURFA_DEFINE_ERROR(NAME, BASE)        \
   class NAME : public BASE                    \
      {                                        \
      public:                                  \
         using BASE::BASE;                     \
         NAME() : BASE(#NAME) {}               \
      };

// core-crypto
FOURFA_DEFINE_ERROR(LengthError, Error)
FOURFA_DEFINE_ERROR(PaddingError, Error)

// stego-envelope
FOURFA_DEFINE_ERROR(ImageFormatError, Error)
FOURFA_DEFINE_ERROR(EnvelopeError, Error)
FOURFA_DEFINE_ERROR(BadMagic, EnvelopeError)
FOURFA_DEFINE_ERROR(UnsupportedVersion, EnvelopeError)
FOURFA_DEFINE_ERROR(TruncatedEnvelope, EnvelopeError)
FOURFA_DEFINE_ERROR(TamperDetected, EnvelopeError)
FOURFA_DEFINE_ERROR(WrongKey, EnvelopeError)

// auth-factors
FOURFA_DEFINE_ERROR(InvalidUsername, Error)
FOURFA_DEFINE_ERROR(InvalidLocation, Error)
FOURFA_DEFINE_ERROR(ImageTooSmall, Error)
FOURFA_DEFINE_ERROR(TransportError, Error)
FOURFA_DEFINE_ERROR(ChallengeLocked, Error)

// fourfa-flow
FOURFA_DEFINE_ERROR(InvalidTransition, Error)
FOURFA_DEFINE_ERROR(TerminalSession, Error)
FOURFA_DEFINE_ERROR(NotAuthenticated, Error)
FOURFA_DEFINE_ERROR(UnknownSession, Error)

// gateway-app
FOURFA_DEFINE_ERROR(StorageError, Error)

#undef FOURFA_DEFINE_ERROR

class CapacityExceeded : public Error
   {
   public:
      CapacityExceeded(std::size_t required, std::size_t available) :
         Error("payload needs " + std::to_string(required) + " bytes of carrier capacity, image offers " +
               std::to_string(available)),
         m_required(required), m_available(available) {}

      std::size_t required() const { return m_required; }
      std::size_t available() const { return m_available; }
   private:
      std::size_t m_required;
      std::size_t m_available;
   };

class MalformedPayload : public Error
   {
   public:
      MalformedPayload(std::size_t line, const std::string& what) :
         Error("malformed payload at line " + std::to_string(line) + ": " + what), m_line(line) {}

      /// 1-based line number of the first offending line.
      std::size_t line() const { return m_line; }
   private:
      std::size_t m_line;
   };

class ConfigError : public Error
   {
   public:
      explicit ConfigError(const std::string& field, const std::string& why = "invalid value") :
         Error("config field '" + field + "': " + why), m_field(field) {}

      const std::string& field() const { return m_field; }
   private:
      std::string m_field;
   };

}
