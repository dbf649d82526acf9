#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egosenti {

enum class Errc {
  ParseError,
  FileNotFound,
  IoError,
  UnsupportedVersion,
  // manifest
  DuplicateStream,
  DuplicateEvent,
  DuplicateImage,
  UnknownImage,
  NonContiguous,
  EmptyEvent,
  BadTimestamp,
  // feature files
  BadMagic,
  DimMismatch,
  CountMismatch,
  TruncatedPayload,
  NonFiniteFeature,
  LikelihoodOutOfRange,
  HashMismatch,
  // catalog
  BadCatalogSize,
  BadSentimentValue,
  DuplicateName,
  // segmentation / eval / svm
  LengthMismatch,
  NoBoundaries,
  MissingClass,
  BadFoldCount,
  NoLabels,
  InvalidConfig,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace egosenti
