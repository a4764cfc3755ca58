#ifndef ODDWALK_ERRORS_HH
#define ODDWALK_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace oddwalk
{
    // Base of everything the library throws on purpose. The CLI maps
    // UsageError to exit 2 and every other Error to exit 1.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public Error
    {
        public:
            ParseError(int line, const std::string & what) :
                Error("line " + std::to_string(line) + ": " + what),
                line_number(line)
            {
            }

            int line_number;
    };

    // Malformed arguments: bad vertex ids, wrong sizes, violated preconditions
    // that are the caller's fault rather than a mathematical hypothesis.
    class InputError : public Error
    {
        public:
            using Error::Error;
    };

    // The operation declines to run on inputs outside its supported domain
    // (too large for exact search, bipartite where non-bipartite is required, ...).
    class RefusalError : public Error
    {
        public:
            using Error::Error;
    };

    // A hypothesis of the underlying theorem was found to be false. Carries a
    // human-readable certificate where one exists.
    class HypothesisError : public Error
    {
        public:
            HypothesisError(const std::string & what, std::string cert = {}) :
                Error(what),
                certificate(std::move(cert))
            {
            }

            std::string certificate;
    };

    // A constructive step produced something that failed its own check. In a
    // correct build this only fires when a caller-asserted precondition was false.
    class ViolationError : public Error
    {
        public:
            using Error::Error;
    };

    class UsageError : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
