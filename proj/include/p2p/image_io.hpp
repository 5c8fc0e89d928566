#pragma once

#include <string>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "p2p/errors.hpp"
#include "p2p/image.hpp"

namespace p2p {

// PNG/JPEG decode into an RGB(A) or gray ImageBuffer.
inline ImageBuffer read_image(const std::string& path) {
  cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
  if (m.empty()) throw IoError("cannot read image: " + path);
  if (m.depth() != CV_8U) {
    cv::Mat tmp;
    m.convertTo(tmp, CV_8U, m.depth() == CV_16U ? 1.0 / 257.0 : 1.0);
    m = tmp;
  }
  if (m.channels() == 3)
    cv::cvtColor(m, m, cv::COLOR_BGR2RGB);
  else if (m.channels() == 4)
    cv::cvtColor(m, m, cv::COLOR_BGRA2RGBA);
  ImageBuffer img(m.cols, m.rows, m.channels());
  for (int y = 0; y < m.rows; ++y)
    std::copy_n(m.ptr<std::uint8_t>(y),
                static_cast<std::size_t>(m.cols) * m.channels(),
                img.data.begin() +
                    static_cast<std::size_t>(y) * m.cols * m.channels());
  return img;
}

inline void write_image(const std::string& path, const ImageBuffer& img) {
  const int type =
      img.channels == 1 ? CV_8UC1 : (img.channels == 3 ? CV_8UC3 : CV_8UC4);
  cv::Mat m(img.height, img.width, type,
            const_cast<std::uint8_t*>(img.data.data()));
  cv::Mat bgr;
  if (img.channels == 3)
    cv::cvtColor(m, bgr, cv::COLOR_RGB2BGR);
  else if (img.channels == 4)
    cv::cvtColor(m, bgr, cv::COLOR_RGBA2BGRA);
  else
    bgr = m;
  if (!cv::imwrite(path, bgr)) throw IoError("cannot write image: " + path);
}

}  // namespace p2p
