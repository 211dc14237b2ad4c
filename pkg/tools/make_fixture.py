"""Regenerate the bundled demo lexicon under src/morphoseed/data/fixture/.

The fixture is synthetic: encodings, concept groupings and the word list
are hand-curated to be internally consistent (every surface character is a
host of its bound concept, every morpheme belongs to exactly one concept,
concept ids equal their first member). The tree places tight synonym
groups as depth-6 siblings so the 0.85 similarity threshold proliferates
within groups, plus a few shallower leaves that stay singletons there.

Run from the repository root:  python tools/make_fixture.py
"""

from __future__ import annotations

import sys
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "morphoseed" / "data" / "fixture"

# key, POS, tree path (category segments under the root), gloss, members.
# The first member is the concept id. Paths with five segments put the
# leaves at depth 6 (siblings there are 0.857-similar, above the 0.85
# threshold); shorter paths create shallower, looser leaves.
CLUSTERS = [
    # nominal: plants
    ("tree", "nominal", "nominal/entity/living/plant/woody", "木本植物的通称", ["木1_07_01", "树1_04_01"]),
    ("fruit", "nominal", "nominal/entity/living/plant/woody", "树木所结的果实", ["李1_03_01", "果1_04_01"]),
    ("forest", "nominal", "nominal/entity/living/plant/woody", "成片生长的树木", ["林1_02_01", "森1_01_01"]),
    ("crop", "nominal", "nominal/entity/living/plant/herb", "田间种植的谷类作物", ["禾1_03_02", "谷1_05_01"]),
    ("flower", "nominal", "nominal/entity/living/plant/herb", "植物的花朵", ["花1_06_01", "卉1_01_01"]),
    ("grass", "nominal", "nominal/entity/living/plant/herb", "草本植物的统称", ["草1_05_01", "苗1_03_01"]),
    ("seed", "nominal", "nominal/entity/living/plant/herb", "植物的种子", ["种1_05_01"]),
    # nominal: animals
    ("horse", "nominal", "nominal/entity/living/animal/livestock", "哺乳动物，善跑，可拉车乘骑", ["马1_03_01", "骏1_01_01", "驹1_02_02"]),
    ("cattle", "nominal", "nominal/entity/living/animal/livestock", "哺乳动物，力气大，能耕田", ["牛1_04_01", "犊1_01_01"]),
    ("dog", "nominal", "nominal/entity/living/animal/livestock", "家畜，听觉嗅觉灵敏", ["犬1_01_01", "狗1_02_01"]),
    ("fowl", "nominal", "nominal/entity/living/animal/bird", "家禽的统称", ["鸡1_02_01", "鸭1_01_01", "禽1_02_01"]),
    ("bird", "nominal", "nominal/entity/living/animal/bird", "会飞的卵生动物", ["鸟1_02_01", "雀1_02_01"]),
    ("fish", "nominal", "nominal/entity/living/animal/aquatic", "水生脊椎动物的统称", ["鱼1_02_01", "鲤1_01_01"]),
    ("tiger", "nominal", "nominal/entity/living/animal/wild", "猛兽，毛黄色有黑色斑纹", ["虎1_02_01"]),
    ("wolf", "nominal", "nominal/entity/living/animal/wild", "野兽，形状像狗", ["狼1_01_01"]),
    ("milk", "nominal", "nominal/entity/living/animal/product", "哺乳动物的乳汁", ["乳1_05_03", "奶1_03_02"]),
    ("egg", "nominal", "nominal/entity/living/animal/product", "鸟类等所产的卵", ["蛋1_02_01", "卵1_01_01"]),
    # nominal: people
    ("person", "nominal", "nominal/entity/living/person/general", "能制造并使用工具进行劳动的高等动物", ["人1_04_01", "民1_03_01"]),
    ("child", "nominal", "nominal/entity/living/person/general", "年纪小的人", ["童1_03_01", "孩1_01_01"]),
    ("teacher", "nominal", "nominal/entity/living/person/role", "传授知识技艺的人", ["师1_07_01", "傅1_02_01"]),
    ("soldier", "nominal", "nominal/entity/living/person/role", "军队中的战斗人员", ["兵1_05_02", "卒1_03_01", "军1_03_02"]),
    ("friend", "nominal", "nominal/entity/living/person/role", "关系亲近的人", ["友1_02_01", "朋1_01_01"]),
    ("kin", "nominal", "nominal/entity/living/person/kin", "亲属中的女性长辈", ["母1_06_01", "姨1_01_01"]),
    # nominal: artifacts
    ("knife", "nominal", "nominal/entity/object/artifact/tool", "切割用的工具", ["刀1_03_01", "刃1_02_01"]),
    ("paper", "nominal", "nominal/entity/object/artifact/tool", "供书写印刷的薄片材料", ["纸1_02_01", "笺1_01_01"]),
    ("saddle", "nominal", "nominal/entity/object/artifact/tool", "骑乘牲口用的器具", ["鞍1_01_01", "镫1_01_01"]),
    ("vehicle", "nominal", "nominal/entity/object/artifact/vessel", "陆地上有轮子的运输工具", ["车1_05_01", "舆1_02_01"]),
    ("boat", "nominal", "nominal/entity/object/artifact/vessel", "水上的运输工具", ["舟1_01_01", "船1_01_01"]),
    ("house", "nominal", "nominal/entity/object/artifact/building", "供人居住的建筑物", ["屋1_02_01", "房1_03_01", "宅1_01_01"]),
    ("clothes", "nominal", "nominal/entity/object/artifact/fabric", "穿在身上的衣物", ["衣1_02_01", "服1_04_01"]),
    ("flag", "nominal", "nominal/entity/object/artifact/fabric", "用布帛做的标志", ["旗1_02_01"]),
    # nominal: nature
    ("mountain", "nominal", "nominal/entity/object/nature/terrain", "地面高耸隆起的部分", ["山1_02_01", "岭1_02_01", "峰1_01_01"]),
    ("rock", "nominal", "nominal/entity/object/nature/terrain", "构成地壳的坚硬物质", ["石1_05_01", "岩1_02_01"]),
    ("soil", "nominal", "nominal/entity/object/nature/terrain", "供耕种的土地", ["土1_07_01", "壤1_03_01", "地1_06_01", "田1_04_01"]),
    ("river", "nominal", "nominal/entity/object/nature/terrain", "大的天然水道", ["江1_02_01", "河1_02_01", "川1_02_02"]),
    ("water", "nominal", "nominal/entity/object/nature/weather", "无色无味的透明液体", ["水1_05_01"]),
    ("rain", "nominal", "nominal/entity/object/nature/weather", "从云层降向地面的水滴", ["雨1_02_01", "霖1_01_01"]),
    ("sun", "nominal", "nominal/entity/object/nature/weather", "太阳", ["日1_05_01", "阳1_03_01"]),
    ("star", "nominal", "nominal/entity/object/nature/weather", "夜晚天空中发光的天体", ["星1_04_01"]),
    # nominal: notions
    ("law", "nominal", "nominal/abstract/notion/rule", "国家制定的行为规则", ["法1_07_01", "律1_02_01"]),
    ("principle", "nominal", "nominal/abstract/notion/rule", "事物的规律道理", ["理1_07_02", "道1_12_03"]),
    ("mind", "nominal", "nominal/abstract/notion/mental", "思想感情", ["心1_06_02", "意1_04_01"]),
    ("knowledge", "nominal", "nominal/abstract/notion/mental", "学问见识", ["识1_03_02", "学1_05_01"]),
    ("speech", "nominal", "nominal/abstract/notion/mental", "说的话", ["言1_04_01", "语1_03_01", "词1_03_01"]),
    ("front", "nominal", "nominal/abstract/notion/space", "方位词，正面的一边", ["前1_04_01"]),
    # the two depth-4 sibling leaves (paths of length 5, 0.8-similar)
    ("time", "nominal", "nominal/abstract/notion", "时间时刻", ["时1_05_01", "辰1_02_01", "天1_08_02"]),
    ("affair", "nominal", "nominal/abstract/notion", "事情事务", ["事1_04_01", "务1_02_01"]),
    # nominal noncompound loans (single whole-word sememes, depth-4 leaves)
    ("nc_grape", "nominal", "nominal/entity/loan", "葡萄，藤本植物，果实可食", ["葡1_01_01"]),
    ("nc_glass", "nominal", "nominal/entity/loan", "玻璃，透明的固体材料", ["玻1_01_01"]),
    ("nc_coffee", "nominal", "nominal/entity/loan", "咖啡，用咖啡种子制成的饮料", ["咖1_02_01"]),
    ("nc_pipa", "nominal", "nominal/entity/loan", "琵琶，拨弦乐器", ["琵1_01_01"]),
    ("nc_cricket", "nominal", "nominal/entity/loan", "蟋蟀，昆虫，善鸣好斗", ["蟋1_01_01"]),
    # verbal: farm work
    ("plant", "verbal", "verbal/action/work/farming/grow", "栽种培育", ["养1_11_02", "植1_04_01", "莳1_03_01", "树1_04_02"]),
    ("water_v", "verbal", "verbal/action/work/farming/grow", "灌溉浇洒", ["浇1_04_03", "灌1_03_01", "淋1_02_01"]),
    ("till", "verbal", "verbal/action/work/farming/grow", "翻松田土", ["耕1_02_01", "犁1_02_02"]),
    ("sow", "verbal", "verbal/action/work/farming/field", "把种子放入土中", ["种1_05_02", "播1_02_01"]),
    ("harvest", "verbal", "verbal/action/work/farming/field", "收取成熟的农作物", ["收1_05_01", "获1_03_01"]),
    # verbal: crafts
    ("build", "verbal", "verbal/action/work/craft/construct", "建造修筑", ["建1_03_01", "筑1_02_01", "造1_03_02"]),
    ("weave", "verbal", "verbal/action/work/craft/construct", "用线缝织", ["缝1_02_01", "织1_02_01"]),
    ("establish", "verbal", "verbal/action/work/craft/found", "树立确立", ["立1_05_02", "树1_04_03"]),
    ("cut", "verbal", "verbal/action/work/craft/divide", "用刀截断", ["切1_02_01", "割1_02_01", "剪1_02_01"]),
    ("destroy", "verbal", "verbal/action/work/craft/divide", "使受到损坏", ["破1_06_01", "毁1_03_01"]),
    ("wash", "verbal", "verbal/action/work/craft/clean", "用水去掉污垢", ["洗1_05_01", "涤1_01_01"]),
    # verbal: body and motion
    ("walk", "verbal", "verbal/action/body/motion/gait", "步行移动", ["行1_06_01", "走1_04_01", "步1_03_02"]),
    ("run", "verbal", "verbal/action/body/motion/gait", "快速地向前移动", ["奔1_02_01", "跑1_02_01"]),
    ("jump", "verbal", "verbal/action/body/motion/gait", "两脚离地向上或向前", ["跳1_03_01", "跃1_01_01"]),
    ("fly", "verbal", "verbal/action/body/motion/transit", "在空中活动", ["飞1_04_01", "翔1_01_01"]),
    ("swim", "verbal", "verbal/action/body/motion/transit", "在水里行进", ["游1_04_02", "泳1_01_01"]),
    ("exit", "verbal", "verbal/action/body/motion/inout", "从里面到外面", ["出1_09_01", "离1_03_01"]),
    ("enter", "verbal", "verbal/action/body/motion/inout", "从外面到里面", ["入1_04_01", "进1_06_01"]),
    ("shake", "verbal", "verbal/action/body/motion/shake", "颤动摇动", ["震1_03_01", "颤1_01_01"]),
    ("strike", "verbal", "verbal/action/body/impact/hit", "用手或器具敲打", ["击1_03_01", "打1_08_01", "拍1_03_01"]),
    ("die", "verbal", "verbal/action/body/impact/perish", "失去生命", ["毙1_01_01", "死1_04_01"]),
    # verbal: mental
    ("think", "verbal", "verbal/mental/cognition/thought/reason", "动脑筋考虑", ["思1_03_01", "想1_04_01", "念1_04_02"]),
    ("know", "verbal", "verbal/mental/cognition/thought/aware", "对事实道理有认识", ["知1_03_01", "晓1_03_02"]),
    ("remember", "verbal", "verbal/mental/cognition/thought/memory", "把印象保持在脑子里", ["忆1_01_01", "记1_04_01"]),
    ("learn", "verbal", "verbal/mental/cognition/study/acquire", "学习钻研", ["学1_05_02", "习1_03_01"]),
    ("speak", "verbal", "verbal/mental/communication/say/tell", "用话表达意思", ["说1_05_01", "讲1_04_01", "言1_04_02"]),
    ("ask", "verbal", "verbal/mental/communication/say/query", "提出问题请人解答", ["问1_06_01", "询1_01_01"]),
    ("answer", "verbal", "verbal/mental/communication/say/reply", "对问题作出回应", ["答1_02_01", "复1_05_03"]),
    ("call", "verbal", "verbal/mental/communication/voice/summon", "大声喊叫招引", ["呼1_04_01", "唤1_01_01"]),
    ("look", "verbal", "verbal/mental/perception/sense/sight", "使视线接触人或物", ["看1_05_01", "视1_04_01", "观1_03_01"]),
    ("hear", "verbal", "verbal/mental/perception/sense/hearing", "用耳朵接受声音", ["听1_04_01", "闻1_05_02"]),
    # verbal noncompounds
    ("nc_clone", "verbal", "verbal/action/loan", "克隆，生物体的无性繁殖", ["克1_04_03"]),
    ("nc_wander", "verbal", "verbal/action/loan", "彷徨，走来走去犹豫不决", ["彷1_01_01"]),
    # adjectival
    ("big", "adjectival", "adjectival/property/dimension/size/magnitude", "体积面积超过一般", ["大1_08_01", "巨1_02_01"]),
    ("small", "adjectival", "adjectival/property/dimension/size/magnitude", "体积面积不及一般", ["小1_06_01", "微1_04_02"]),
    ("tall", "adjectival", "adjectival/property/dimension/size/height", "从下向上距离大", ["高1_06_01", "崇1_02_02"]),
    ("wide", "adjectival", "adjectival/property/dimension/size/breadth", "面积宽阔", ["广1_03_01", "阔1_02_01"]),
    ("red", "adjectival", "adjectival/property/appearance/color/hue", "像鲜血的颜色", ["红1_05_01", "赤1_03_01"]),
    ("white", "adjectival", "adjectival/property/appearance/color/hue", "像霜雪的颜色", ["白1_09_01", "皓1_01_01"]),
    ("black", "adjectival", "adjectival/property/appearance/color/hue", "像煤炭的颜色", ["黑1_04_01", "乌1_03_02"]),
    ("beautiful", "adjectival", "adjectival/property/appearance/looks/pretty", "好看漂亮", ["美1_05_01", "丽1_02_01"]),
    ("good", "adjectival", "adjectival/property/quality/worth/positive", "优点多的令人满意的", ["好1_07_01", "良1_03_01", "佳1_01_01"]),
    ("bad", "adjectival", "adjectival/property/quality/worth/negative", "缺点多的", ["坏1_04_01", "劣1_01_01"]),
    ("new", "adjectival", "adjectival/property/quality/age/fresh", "刚出现的", ["新1_05_01"]),
    ("old", "adjectival", "adjectival/property/quality/age/stale", "过去的，经过长时间的", ["旧1_03_01", "陈1_05_03"]),
    ("fast", "adjectival", "adjectival/property/state/tempo/quick", "速度高的", ["快1_06_01", "疾1_04_02", "速1_02_01"]),
    ("slow", "adjectival", "adjectival/property/state/tempo/tardy", "速度低的", ["慢1_02_01", "缓1_03_01"]),
    ("strong", "adjectival", "adjectival/property/state/vigor/mighty", "力量大的", ["强1_06_01", "壮1_02_01"]),
    ("weak", "adjectival", "adjectival/property/state/vigor/feeble", "力量小的", ["弱1_04_01"]),
    ("clean", "adjectival", "adjectival/property/state/purity/spotless", "没有尘土污垢的", ["净1_04_01", "洁1_01_01"]),
    ("nc_awkward", "adjectival", "adjectival/property/loan", "尴尬，处境困难不好处理", ["尴1_01_01"]),
    # function words (shallow leaves, singleton neighbor sets at 0.85)
    ("very", "adverbial", "function/modifier/degree", "表示程度高", ["很1_01_01", "颇1_02_01"]),
    ("again", "adverbial", "function/modifier/repeat", "表示重复或继续", ["再1_03_01", "又1_04_01"]),
    ("one", "numeral", "function/quantity/number", "最小的正整数", ["一1_06_01"]),
    ("hundred", "numeral", "function/quantity/number", "十个十", ["百1_02_01"]),
    ("clf_flat", "classifier", "function/quantity/unit", "量词，用于纸等薄片", ["张2_06_01"]),
    ("clf_strip", "classifier", "function/quantity/unit", "量词，用于细长的东西", ["条1_05_04"]),
    ("clf_time", "classifier", "function/quantity/unit", "量词，用于反复出现的事情", ["次1_03_01"]),
    ("clf_animal", "classifier", "function/quantity/unit", "量词，用于马骡等", ["匹1_02_01"]),
    ("pron_i", "pronominal", "function/reference/pronoun", "称自己", ["我1_01_01"]),
    ("pron_you", "pronominal", "function/reference/pronoun", "称谈话的对方", ["你1_01_01"]),
    ("from", "prepositional", "function/relation/preposition", "表示起点", ["从1_06_01"]),
    ("toward", "prepositional", "function/relation/preposition", "表示动作的方向", ["向1_05_03"]),
    ("and", "conjunctional", "function/relation/conjunction", "表示并列关系", ["和2_05_01"]),
    ("or", "conjunctional", "function/relation/conjunction", "表示选择关系", ["或1_02_01"]),
    ("aux_zhi", "auxiliary", "function/relation/auxiliary", "助词，相当于的", ["之1_04_01"]),
    ("aux_suo", "auxiliary", "function/relation/auxiliary", "助词，与动词组成名词性短语", ["所1_05_04"]),
    ("onom_rumble", "onomatopoetic", "function/expressive/sound", "形容剧烈震动的声音", ["隆1_02_02"]),
    ("onom_murmur", "onomatopoetic", "function/expressive/sound", "形容溪水流动的声音", ["潺1_01_01"]),
    ("interj_a", "interjection", "function/expressive/exclaim", "表示赞叹或惊讶", ["啊1_05_01"]),
    ("interj_o", "interjection", "function/expressive/exclaim", "表示领会醒悟", ["哦1_03_01"]),
    ("prefix_lao", "affix", "function/grammatical/affix", "前缀，用于称人或某些动物", ["老1_07_06"]),
    ("prefix_a", "affix", "function/grammatical/affix", "前缀，用于排行或称呼", ["阿1_02_01"]),
    ("suffix_zi", "affix", "function/grammatical/affix", "后缀，名词词尾", ["子1_09_08"]),
    ("suffix_tou", "affix", "function/grammatical/affix", "后缀，名词词尾", ["头1_06_06"]),
]

# Morphemes present in the dictionary but not yet grouped into a concept.
UNBOUND_MORPHEMES = [
    ("树1_04_04", "nominal", "姓氏"),
    ("法1_07_04", "verbal", "效法仿效"),
    ("道1_12_01", "nominal", "道路"),
]

# surface, word POS, pattern, first cluster, second cluster. Surface
# characters must be hosts of the respective clusters (noncompounds bind
# one whole-word concept to both slots instead).
WORDS = [
    # Verb-Object
    ("植树", "verbal", "Verb-Object", "plant", "tree"),
    ("养花", "verbal", "Verb-Object", "plant", "flower"),
    ("莳花", "verbal", "Verb-Object", "plant", "flower"),
    ("浇水", "verbal", "Verb-Object", "water_v", "water"),
    ("浇花", "verbal", "Verb-Object", "water_v", "flower"),
    ("灌田", "verbal", "Verb-Object", "water_v", "soil"),
    ("耕地", "verbal", "Verb-Object", "till", "soil"),
    ("耕田", "verbal", "Verb-Object", "till", "soil"),
    ("犁地", "verbal", "Verb-Object", "till", "soil"),
    ("种谷", "verbal", "Verb-Object", "sow", "crop"),
    ("播种", "verbal", "Verb-Object", "sow", "seed"),
    ("收谷", "verbal", "Verb-Object", "harvest", "crop"),
    ("获禾", "verbal", "Verb-Object", "harvest", "crop"),
    ("建房", "verbal", "Verb-Object", "build", "house"),
    ("筑屋", "verbal", "Verb-Object", "build", "house"),
    ("造船", "verbal", "Verb-Object", "build", "boat"),
    ("造车", "verbal", "Verb-Object", "build", "vehicle"),
    ("织衣", "verbal", "Verb-Object", "weave", "clothes"),
    ("缝衣", "verbal", "Verb-Object", "weave", "clothes"),
    ("洗衣", "verbal", "Verb-Object", "wash", "clothes"),
    ("洗车", "verbal", "Verb-Object", "wash", "vehicle"),
    ("切纸", "verbal", "Verb-Object", "cut", "paper"),
    ("剪纸", "verbal", "Verb-Object", "cut", "paper"),
    ("割草", "verbal", "Verb-Object", "cut", "grass"),
    ("立法", "verbal", "Verb-Object", "establish", "law"),
    ("学法", "verbal", "Verb-Object", "learn", "law"),
    ("学语", "verbal", "Verb-Object", "learn", "speech"),
    ("讲理", "verbal", "Verb-Object", "speak", "principle"),
    ("说理", "verbal", "Verb-Object", "speak", "principle"),
    ("问道", "verbal", "Verb-Object", "ask", "principle"),
    ("观星", "verbal", "Verb-Object", "look", "star"),
    ("看山", "verbal", "Verb-Object", "look", "mountain"),
    ("击石", "verbal", "Verb-Object", "strike", "rock"),
    ("打水", "verbal", "Verb-Object", "strike", "water"),
    ("走马", "verbal", "Verb-Object", "walk", "horse"),
    # Modifier-Head: adjective + noun
    ("红旗", "nominal", "Modifier-Head", "red", "flag"),
    ("赤旗", "nominal", "Modifier-Head", "red", "flag"),
    ("红花", "nominal", "Modifier-Head", "red", "flower"),
    ("白纸", "nominal", "Modifier-Head", "white", "paper"),
    ("白马", "nominal", "Modifier-Head", "white", "horse"),
    ("白石", "nominal", "Modifier-Head", "white", "rock"),
    ("黑马", "nominal", "Modifier-Head", "black", "horse"),
    ("黑狗", "nominal", "Modifier-Head", "black", "dog"),
    ("黑土", "nominal", "Modifier-Head", "black", "soil"),
    ("大树", "nominal", "Modifier-Head", "big", "tree"),
    ("巨石", "nominal", "Modifier-Head", "big", "rock"),
    ("大江", "nominal", "Modifier-Head", "big", "river"),
    ("大山", "nominal", "Modifier-Head", "big", "mountain"),
    ("小舟", "nominal", "Modifier-Head", "small", "boat"),
    ("小狗", "nominal", "Modifier-Head", "small", "dog"),
    ("小鸟", "nominal", "Modifier-Head", "small", "bird"),
    ("微雨", "nominal", "Modifier-Head", "small", "rain"),
    ("高山", "nominal", "Modifier-Head", "tall", "mountain"),
    ("高峰", "nominal", "Modifier-Head", "tall", "mountain"),
    ("崇山", "nominal", "Modifier-Head", "tall", "mountain"),
    ("好友", "nominal", "Modifier-Head", "good", "friend"),
    ("良师", "nominal", "Modifier-Head", "good", "teacher"),
    ("佳果", "nominal", "Modifier-Head", "good", "fruit"),
    ("新屋", "nominal", "Modifier-Head", "new", "house"),
    ("新衣", "nominal", "Modifier-Head", "new", "clothes"),
    ("旧宅", "nominal", "Modifier-Head", "old", "house"),
    ("旧衣", "nominal", "Modifier-Head", "old", "clothes"),
    ("快马", "nominal", "Modifier-Head", "fast", "horse"),
    ("快车", "nominal", "Modifier-Head", "fast", "vehicle"),
    ("强兵", "nominal", "Modifier-Head", "strong", "soldier"),
    ("壮卒", "nominal", "Modifier-Head", "strong", "soldier"),
    ("美意", "nominal", "Modifier-Head", "beautiful", "mind"),
    ("丽人", "nominal", "Modifier-Head", "beautiful", "person"),
    ("广田", "nominal", "Modifier-Head", "wide", "soil"),
    ("阔江", "nominal", "Modifier-Head", "wide", "river"),
    # Modifier-Head: noun + noun
    ("骏马", "nominal", "Modifier-Head", "horse", "horse"),
    ("马驹", "nominal", "Modifier-Head", "horse", "horse"),
    ("马鞍", "nominal", "Modifier-Head", "horse", "saddle"),
    ("马镫", "nominal", "Modifier-Head", "horse", "saddle"),
    ("牛乳", "nominal", "Modifier-Head", "cattle", "milk"),
    ("牛奶", "nominal", "Modifier-Head", "cattle", "milk"),
    ("鸡蛋", "nominal", "Modifier-Head", "fowl", "egg"),
    ("鸭蛋", "nominal", "Modifier-Head", "fowl", "egg"),
    ("鸟卵", "nominal", "Modifier-Head", "bird", "egg"),
    ("山石", "nominal", "Modifier-Head", "mountain", "rock"),
    ("山前", "nominal", "Modifier-Head", "mountain", "front"),
    ("江船", "nominal", "Modifier-Head", "river", "boat"),
    ("河水", "nominal", "Modifier-Head", "river", "water"),
    ("雨水", "nominal", "Modifier-Head", "rain", "water"),
    ("花车", "nominal", "Modifier-Head", "flower", "vehicle"),
    ("花衣", "nominal", "Modifier-Head", "flower", "clothes"),
    ("纸船", "nominal", "Modifier-Head", "paper", "boat"),
    ("木屋", "nominal", "Modifier-Head", "tree", "house"),
    ("木刀", "nominal", "Modifier-Head", "tree", "knife"),
    ("石屋", "nominal", "Modifier-Head", "rock", "house"),
    ("军马", "nominal", "Modifier-Head", "soldier", "horse"),
    ("军车", "nominal", "Modifier-Head", "soldier", "vehicle"),
    ("法理", "nominal", "Modifier-Head", "law", "principle"),
    ("心语", "nominal", "Modifier-Head", "mind", "speech"),
    ("星辰", "nominal", "Modifier-Head", "star", "time"),
    ("童心", "nominal", "Modifier-Head", "child", "mind"),
    ("母语", "nominal", "Modifier-Head", "kin", "speech"),
    # Parallel: synonym pairs within one concept
    ("树木", "nominal", "Parallel", "tree", "tree"),
    ("思想", "nominal", "Parallel", "think", "think"),
    ("言语", "nominal", "Parallel", "speech", "speech"),
    ("词语", "nominal", "Parallel", "speech", "speech"),
    ("道理", "nominal", "Parallel", "principle", "principle"),
    ("岩石", "nominal", "Parallel", "rock", "rock"),
    ("土壤", "nominal", "Parallel", "soil", "soil"),
    ("田地", "nominal", "Parallel", "soil", "soil"),
    ("房屋", "nominal", "Parallel", "house", "house"),
    ("屋宅", "nominal", "Parallel", "house", "house"),
    ("衣服", "nominal", "Parallel", "clothes", "clothes"),
    ("朋友", "nominal", "Parallel", "friend", "friend"),
    ("山岭", "nominal", "Parallel", "mountain", "mountain"),
    ("江河", "nominal", "Parallel", "river", "river"),
    ("河川", "nominal", "Parallel", "river", "river"),
    ("林木", "nominal", "Parallel", "forest", "tree"),
    ("森林", "nominal", "Parallel", "forest", "forest"),
    ("花卉", "nominal", "Parallel", "flower", "flower"),
    ("禾谷", "nominal", "Parallel", "crop", "crop"),
    ("草苗", "nominal", "Parallel", "grass", "grass"),
    ("兵卒", "nominal", "Parallel", "soldier", "soldier"),
    ("师傅", "nominal", "Parallel", "teacher", "teacher"),
    ("奔跑", "verbal", "Parallel", "run", "run"),
    ("跳跃", "verbal", "Parallel", "jump", "jump"),
    ("行走", "verbal", "Parallel", "walk", "walk"),
    ("切割", "verbal", "Parallel", "cut", "cut"),
    ("洗涤", "verbal", "Parallel", "wash", "wash"),
    ("缝织", "verbal", "Parallel", "weave", "weave"),
    ("建筑", "verbal", "Parallel", "build", "build"),
    ("学习", "verbal", "Parallel", "learn", "learn"),
    ("呼唤", "verbal", "Parallel", "call", "call"),
    ("思念", "verbal", "Parallel", "think", "think"),
    ("知晓", "verbal", "Parallel", "know", "know"),
    ("记忆", "verbal", "Parallel", "remember", "remember"),
    ("观看", "verbal", "Parallel", "look", "look"),
    ("讲说", "verbal", "Parallel", "speak", "speak"),
    ("询问", "verbal", "Parallel", "ask", "ask"),
    ("答复", "verbal", "Parallel", "answer", "answer"),
    ("破毁", "verbal", "Parallel", "destroy", "destroy"),
    ("美丽", "adjectival", "Parallel", "beautiful", "beautiful"),
    ("强壮", "adjectival", "Parallel", "strong", "strong"),
    ("良好", "adjectival", "Parallel", "good", "good"),
    ("佳好", "adjectival", "Parallel", "good", "good"),
    ("洁净", "adjectival", "Parallel", "clean", "clean"),
    ("疾速", "adjectival", "Parallel", "fast", "fast"),
    ("缓慢", "adjectival", "Parallel", "slow", "slow"),
    # Parallel: antonym or coordinate pairs across concepts
    ("大小", "nominal", "Parallel", "big", "small"),
    ("好坏", "nominal", "Parallel", "good", "bad"),
    ("新旧", "nominal", "Parallel", "new", "old"),
    ("黑白", "nominal", "Parallel", "black", "white"),
    ("快慢", "nominal", "Parallel", "fast", "slow"),
    ("强弱", "nominal", "Parallel", "strong", "weak"),
    ("出入", "verbal", "Parallel", "exit", "enter"),
    ("山川", "nominal", "Parallel", "mountain", "river"),
    ("山水", "nominal", "Parallel", "mountain", "water"),
    ("水土", "nominal", "Parallel", "water", "soil"),
    ("你我", "pronominal", "Parallel", "pron_you", "pron_i"),
    # Adverb-Verb
    ("广播", "verbal", "Adverb-Verb", "wide", "sow"),
    ("疾行", "verbal", "Adverb-Verb", "fast", "walk"),
    ("速记", "verbal", "Adverb-Verb", "fast", "remember"),
    ("快跑", "verbal", "Adverb-Verb", "fast", "run"),
    ("慢行", "verbal", "Adverb-Verb", "slow", "walk"),
    ("缓行", "verbal", "Adverb-Verb", "slow", "walk"),
    ("高飞", "verbal", "Adverb-Verb", "tall", "fly"),
    ("再想", "verbal", "Adverb-Verb", "again", "think"),
    ("再问", "verbal", "Adverb-Verb", "again", "ask"),
    ("又念", "verbal", "Adverb-Verb", "again", "think"),
    # Suffixation
    ("石头", "nominal", "Suffixation", "rock", "suffix_tou"),
    ("木头", "nominal", "Suffixation", "tree", "suffix_tou"),
    ("孩子", "nominal", "Suffixation", "child", "suffix_zi"),
    ("房子", "nominal", "Suffixation", "house", "suffix_zi"),
    ("刀子", "nominal", "Suffixation", "knife", "suffix_zi"),
    ("车子", "nominal", "Suffixation", "vehicle", "suffix_zi"),
    ("日头", "nominal", "Suffixation", "sun", "suffix_tou"),
    ("鸭子", "nominal", "Suffixation", "fowl", "suffix_zi"),
    # Prefixation
    ("老虎", "nominal", "Prefixation", "prefix_lao", "tiger"),
    ("老师", "nominal", "Prefixation", "prefix_lao", "teacher"),
    ("阿姨", "nominal", "Prefixation", "prefix_a", "kin"),
    # Verb-Complement
    ("击毙", "verbal", "Verb-Complement", "strike", "die"),
    ("打破", "verbal", "Verb-Complement", "strike", "destroy"),
    ("洗净", "verbal", "Verb-Complement", "wash", "clean"),
    ("割破", "verbal", "Verb-Complement", "cut", "destroy"),
    # Subject-Predicate
    ("地震", "verbal", "Subject-Predicate", "soil", "shake"),
    ("心跳", "verbal", "Subject-Predicate", "mind", "jump"),
    ("日出", "verbal", "Subject-Predicate", "sun", "exit"),
    # Verb-Verb
    ("耕种", "verbal", "Verb-Verb", "till", "sow"),
    ("收割", "verbal", "Verb-Verb", "harvest", "cut"),
    ("听说", "verbal", "Verb-Verb", "hear", "speak"),
    ("问答", "verbal", "Verb-Verb", "ask", "answer"),
    ("游泳", "verbal", "Verb-Verb", "swim", "swim"),
    ("观想", "verbal", "Verb-Verb", "look", "think"),
    # Overlapping
    ("星星", "nominal", "Overlapping", "star", "star"),
    ("人人", "nominal", "Overlapping", "person", "person"),
    ("天天", "adverbial", "Overlapping", "time", "time"),
    ("步步", "adverbial", "Overlapping", "walk", "walk"),
    # Preposition-Object
    ("从小", "adverbial", "Preposition-Object", "from", "small"),
    ("向前", "adverbial", "Preposition-Object", "toward", "front"),
    # Noun-Classifier
    ("纸张", "nominal", "Noun-Classifier", "paper", "clf_flat"),
    ("马匹", "nominal", "Noun-Classifier", "horse", "clf_animal"),
    ("车次", "nominal", "Noun-Classifier", "vehicle", "clf_time"),
    # Quantifier
    ("一天", "nominal", "Quantifier", "one", "time"),
    ("一次", "nominal", "Quantifier", "one", "clf_time"),
    ("百人", "nominal", "Quantifier", "hundred", "person"),
    # Classifier-Classifier
    ("人次", "classifier", "Classifier-Classifier", "person", "clf_time"),
    # Noncompound (whole-word sememe bound to both slots)
    ("葡萄", "nominal", "Noncompound", "nc_grape", "nc_grape"),
    ("玻璃", "nominal", "Noncompound", "nc_glass", "nc_glass"),
    ("咖啡", "nominal", "Noncompound", "nc_coffee", "nc_coffee"),
    ("琵琶", "nominal", "Noncompound", "nc_pipa", "nc_pipa"),
    ("蟋蟀", "nominal", "Noncompound", "nc_cricket", "nc_cricket"),
    ("克隆", "verbal", "Noncompound", "nc_clone", "nc_clone"),
    ("彷徨", "verbal", "Noncompound", "nc_wander", "nc_wander"),
    ("尴尬", "adjectival", "Noncompound", "nc_awkward", "nc_awkward"),
]

# Word-pair similarity judgments (0-10) for the bundled evaluation demo.
PAIRS = [
    ("骏马", "白马", 8.5), ("牛奶", "鸡蛋", 6.0), ("高山", "山岭", 8.0),
    ("高山", "岩石", 6.5), ("江河", "山川", 7.0), ("河水", "雨水", 6.5),
    ("思想", "道理", 7.5), ("言语", "词语", 8.5), ("思想", "言语", 6.0),
    ("红旗", "白纸", 2.0), ("大树", "林木", 7.5), ("大树", "快马", 1.5),
    ("孩子", "童心", 5.0), ("朋友", "好友", 9.0), ("老师", "师傅", 8.0),
    ("建筑", "房屋", 6.5), ("洗衣", "洗车", 5.5), ("耕地", "播种", 7.0),
    ("植树", "养花", 7.5), ("植树", "耕地", 6.0), ("浇水", "灌田", 7.5),
    ("学习", "速记", 4.5), ("学法", "立法", 5.5), ("奔跑", "快跑", 8.0),
    ("奔跑", "慢行", 3.5), ("跳跃", "心跳", 3.0), ("星星", "星辰", 7.5),
    ("石头", "岩石", 8.0), ("木头", "木屋", 4.5), ("衣服", "新衣", 7.0),
    ("美丽", "丽人", 6.0), ("强壮", "壮卒", 5.5), ("好坏", "良好", 3.0),
    ("快慢", "疾速", 4.0), ("葡萄", "咖啡", 3.5), ("玻璃", "琵琶", 1.0),
    ("击毙", "打破", 4.0), ("地震", "山岭", 2.5), ("广播", "听说", 4.5),
    ("观看", "观星", 5.0),
]


def build():
    keys = [c[0] for c in CLUSTERS]
    assert len(keys) == len(set(keys)), "duplicate cluster key"
    by_key = {c[0]: c for c in CLUSTERS}

    all_morphemes = {}  # encoding -> (pos, definition)
    entry_counts = {}

    def register(enc: str, pos: str, definition: str) -> None:
        assert enc not in all_morphemes, f"morpheme {enc} defined twice"
        host, rest = enc[0], enc[1:]
        x1, x2, x3 = (int(p) for p in rest.split("_"))
        assert 1 <= x3 <= x2, f"bad encoding {enc}"
        prev = entry_counts.setdefault((host, x1), x2)
        assert prev == x2, f"sememe count mismatch for host {host}{x1}: {prev} vs {x2} ({enc})"
        all_morphemes[enc] = (pos, definition)

    for _key, pos, _path, gloss, members in CLUSTERS:
        for enc in members:
            register(enc, pos, gloss)
    for enc, pos, definition in UNBOUND_MORPHEMES:
        register(enc, pos, definition)

    hosts = {key: {m[0] for m in c[4]} for key, c in by_key.items()}
    seen_surfaces = set()
    for surface, _pos, pattern, first, second in WORDS:
        assert len(surface) == 2, surface
        assert surface not in seen_surfaces, f"duplicate word {surface}"
        seen_surfaces.add(surface)
        assert first in by_key and second in by_key, f"unknown cluster for {surface}"
        if pattern == "Noncompound":
            assert first == second and len(by_key[first][4]) == 1, surface
            assert by_key[first][4][0][0] in surface, f"noncompound host convention broken for {surface}"
        else:
            assert surface[0] in hosts[first], f"{surface}: {surface[0]} not a host of {first}"
            assert surface[1] in hosts[second], f"{surface}: {surface[1]} not a host of {second}"

    for w1, w2, _ in PAIRS:
        assert w1 in seen_surfaces and w2 in seen_surfaces, f"pair ({w1}, {w2}) uses unknown word"

    OUT_DIR.mkdir(parents=True, exist_ok=True)

    lines = ["# encoding\tpos\tdefinition"]
    for enc in sorted(all_morphemes):
        pos, definition = all_morphemes[enc]
        lines.append(f"{enc}\t{pos}\t{definition}")
    (OUT_DIR / "morphemes.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# mc_id\tpos\tmembers\tgloss"]
    for _key, pos, _path, gloss, members in CLUSTERS:
        lines.append(f"{members[0]}\t{pos}\t{','.join(members)}\t{gloss}")
    (OUT_DIR / "mcs.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# surface\tpos\tpattern\tfirst_mc\tsecond_mc"]
    for surface, pos, pattern, first, second in WORDS:
        lines.append(f"{surface}\t{pos}\t{pattern}\t{by_key[first][4][0]}\t{by_key[second][4][0]}")
    (OUT_DIR / "words.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    # hierarchy: category chains, then concept leaves
    edges = []
    declared = set()
    for _key, _pos, path, _gloss, members in CLUSTERS:
        segments = path.split("/")
        parent = "ROOT"
        prefix = []
        for seg in segments:
            prefix.append(seg)
            node = "cat:" + ".".join(prefix)
            if node not in declared:
                declared.add(node)
                edges.append((node, parent))
            parent = node
        edges.append((members[0], parent))
    lines = ["# child\tparent", "ROOT\t-"]
    lines.extend(f"{child}\t{parent}" for child, parent in edges)
    (OUT_DIR / "hierarchy.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    lines = ["# word1\tword2\tscore"]
    lines.extend(f"{w1}\t{w2}\t{score:g}" for w1, w2, score in PAIRS)
    (OUT_DIR / "pairs.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    print(f"fixture written to {OUT_DIR}")
    print(f"  morphemes: {len(all_morphemes)}  concepts: {len(CLUSTERS)}  words: {len(WORDS)}  pairs: {len(PAIRS)}")


def check():
    """Load through the package to prove the fixture is valid."""
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from morphoseed.hierarchy import check_tree_covers_lexicon, load_tree
    from morphoseed.lexicon import lexicon_stats, load_lexicon_dir

    lexicon = load_lexicon_dir(OUT_DIR)
    tree = load_tree(OUT_DIR / "hierarchy.tsv")
    issues = check_tree_covers_lexicon(tree, lexicon)
    assert not issues, issues
    stats = lexicon_stats(lexicon)
    print(stats.to_tsv())


if __name__ == "__main__":
    build()
    check()
