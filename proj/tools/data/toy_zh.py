# Chinese toy resources (HSK-style levels). Words missing here fall back to
# per-character levels in the scorer.

LEXICON = {
    "HSK1": """大 桥 买 很 年 人 水 书 学校 孩子 老 多 米 看 来 去 住 家 北 东 喝 茶 小 好 冷 天
早上 一 两 二 十 万 本 工作 找 做 山 风 公园 走 商店 有 在 说 字""",
    "HSK2": """河 附近 市场 每 教会 美丽 窗户 快 城 远 船 到 旅游 送 路 开始 得到 常常 有名
新 生活 唱歌 歌 家人 帮助 冬天 夏天 年轻人 一起 慢慢""",
    "HSK3": """镇 村 居民 建 商人 布 战争 以后 人口 增加 地区 国王 政府 森林 历史 研究 博物馆
画 节日 工人 墙 修 议会 港口 铁路 方便 经济 重要 图书馆 世纪 结婚 音乐家 工厂 机器 首都
比较 变 强 搬 农民 山谷 难 土地 生意 很大 很多 许多 发展 保持 语言 起源 传统 丰富
城堡 带来 丝绸 塔 最 建筑 之一""",
    "HSK4": """购买 著名 逐渐 获得 军队 控制 困难 约 现代 学者 风暴 丘陵 协议 签订 运输 货物
主要 互相 富裕 一年到头 吸引""",
    "HSK5": """居民区 迅速 居住 商业 领土""",
    "HSK6": """频繁 冲突 繁荣 众多 建造 维护""",
    "HSK7-9": """宏伟 启动""",
}

PHRASES = {}

SYNONYMS = [
    ("购买", "买"), ("著名", "有名"), ("迅速", "快"), ("频繁", "常常"), ("冲突", "战争"),
    ("获得", "得到"), ("繁荣", "发展"), ("领土", "土地"), ("商业", "生意"), ("宏伟", "很大"),
    ("逐渐", "慢慢"), ("困难", "难"), ("居住", "住"), ("建造", "建"), ("众多", "许多"),
    ("启动", "开始"), ("维护", "保持"), ("现代", "新"),
]

LEMMAS = [
    ("了", "了", "PART"), ("的", "的", "PART"), ("着", "着", "PART"),
]

SENTENCES = [
    "镇上的居民在河附近建造了一座大桥。",
    "众多商人每周在市场购买米和布。",
    "这个地区的教会因美丽的窗户而著名。",
    "战争以后，镇上的人口迅速增加。",
    "国王居住在山谷上面的城堡里。",
    "军队控制这个地区两百年。",
    "农民频繁地用河运输货物。",
    "两国签订了协议，冲突结束了。",
    "以后，政府获得了大片森林的领土。",
    "学校主要是商人的孩子上学。",
    "学者研究了古老语言的起源。",
    "博物馆里有很多现代的画。",
    "每年夏天的节日有很多人来。",
    "风暴以后，工人们修了坏的墙。",
    "镇议会认为旧港口太小了。",
    "新的铁路让两个镇之间的旅游更方便。",
    "这片土地对国家的经济很重要。",
    "船从远方的港口到了。",
    "图书馆里约有一万本书。",
    "孩子们在村里的学校学习读书写字。",
    "河很长，冬天的水很冷。",
    "人们星期天早上常常在公园走路。",
    "从东方来的商人带来了茶和丝绸。",
    "老塔是这个国家最老的建筑之一。",
    "村里的生活很困难，但是家人互相帮助。",
    "音乐家在结婚的时候唱传统的歌。",
    "这个地区一年到头有丰富的水。",
    "工厂开始做布，以后做机器。",
    "和首都比较，这个镇还是很小。",
    "山挡住了北方的强风。",
    "很多年轻人搬到首都找工作。",
    "港口为了大船变大了。",
    "地区的繁荣吸引了远方村子的农民。",
    "镇子因为商业逐渐变得富裕。",
    "宏伟的城堡在丘陵上面。",
    "商人们启动了新的市场。",
    "国王维护了老桥。",
]

HEADINGS = ["参考文献", "参考资料", "注释", "外部链接", "参见", "延伸阅读"]
REF_LINES = ["张三：《北方小镇的历史》，北京，一九九八年。",
             "镇议会档案，港口记录，第一卷到第四卷。"]
SHORT = "镇上有一个小博物馆。"
TITLES = ["港口小镇", "河谷", "老市场"]
